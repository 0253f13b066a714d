#include "domtree/json_out.hpp"

namespace domtree {

using nlohmann::json;

json json_of(const mpz_class& z) { return z.get_str(); }

json json_of(const mpq_class& q) {
  return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

json json_of(const DomPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs) coeffs.push_back(c.get_str());
  return json{{"n", p.n}, {"coeffs", coeffs}};
}

json json_of(const CriticalDecomposition& d) {
  return json{{"a1", d.a1.ids()},   {"a2", d.a2.ids()},
              {"n1", d.n1.ids()},   {"n2", d.n2.ids()},
              {"supported", d.supported.ids()}};
}

json json_of(const MatchingReport& r) {
  json pairs = json::array();
  for (auto [outside, critical] : r.matched_pairs)
    pairs.push_back(json::array({outside, critical}));
  return json{{"rho1", r.rho1},
              {"rho2", r.rho2},
              {"unmatched", r.unmatched},
              {"matched_pairs", pairs}};
}

json json_of(const ReconfigTrace& t) {
  json steps = json::array();
  for (const auto& st : t.steps) {
    json step{{"i", st.index},
              {"A", st.removed},
              {"N", st.added},
              {"M", st.result.ids()}};
    step["u"] = st.pivot ? json(*st.pivot) : json(nullptr);
    steps.push_back(step);
  }
  return json{{"input", t.input.ids()},
              {"output", t.output.ids()},
              {"terminated", t.terminated},
              {"step_cap_hit", t.step_cap_hit},
              {"preconditions_ok", t.preconditions_ok},
              {"steps", steps}};
}

json json_of(const SequenceReport& r) {
  json out{{"unimodal", r.unimodal},
           {"mode_indices", r.mode_indices},
           {"log_concave", r.log_concave},
           {"increasing_prefix_end", r.increasing_prefix_end},
           {"decreasing_suffix_start", r.decreasing_suffix_start}};
  out["first_lc_violation"] =
      r.first_lc_violation ? json(*r.first_lc_violation) : json(nullptr);
  return out;
}

json json_of(const SegmentCheck& c) {
  return json{{"holds", c.holds},
              {"chain_from", c.chain_from},
              {"chain_to", c.chain_to}};
}

json json_of(const GapCheck& c) {
  return json{{"applicable", c.applicable},
              {"holds", c.holds},
              {"gamma", c.gamma},
              {"big_gamma", c.big_gamma}};
}

json json_of(const AvdReport& r) {
  return json{{"avd", json_of(r.avd)},
              {"lower_bound", json_of(r.lower_bound)},
              {"upper_bound", json_of(r.upper_bound)},
              {"within_bounds", r.within_bounds}};
}

json json_of(const TkCertificate& c) {
  return json{{"k", c.k},
              {"n", c.n},
              {"gamma", c.gamma},
              {"d_gamma", c.d_gamma.get_str()},
              {"d_gamma_plus_1", c.d_gamma_plus_1.get_str()},
              {"d_gamma_plus_2", c.d_gamma_plus_2.get_str()},
              {"expected_d_gamma_plus_1", c.expected_d_gamma_plus_1.get_str()},
              {"lower_bound_d_gamma_plus_2",
               c.lower_bound_d_gamma_plus_2.get_str()},
              {"gamma_matches", c.gamma_matches},
              {"unique_minimum", c.unique_minimum},
              {"plus_1_matches", c.plus_1_matches},
              {"plus_2_at_least_bound", c.plus_2_at_least_bound},
              {"product_exceeds_square", c.product_exceeds_square},
              {"violation_required", c.violation_required},
              {"first_lc_violation", c.first_lc_violation
                                         ? nlohmann::json(*c.first_lc_violation)
                                         : nlohmann::json(nullptr)},
              {"ok", c.ok()}};
}

json json_of(const verify::SuiteResult& r) {
  json findings = json::array();
  for (const auto& f : r.findings)
    findings.push_back(json{{"tree", f.tree_id}, {"detail", f.detail}});
  return json{{"suite", r.suite},
              {"trees", r.trees},
              {"findings", findings},
              {"notes", r.notes},
              {"ok", r.ok()}};
}

}  // namespace domtree
