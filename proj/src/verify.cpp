#include "domtree/verify.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "domtree/critical.hpp"
#include "domtree/error.hpp"
#include "domtree/kernels.hpp"
#include "domtree/rng.hpp"

namespace domtree::verify {

Scope parse_scope(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);

  Scope s;
  try {
    if (parts[0] == "exhaustive" && parts.size() == 2) {
      s.kind = Scope::Kind::Exhaustive;
      s.n = std::stoi(parts[1]);
      if (s.n < 1) throw std::invalid_argument("n");
      return s;
    }
    if (parts[0] == "random" && (parts.size() == 3 || parts.size() == 4)) {
      s.kind = Scope::Kind::Random;
      s.n = std::stoi(parts[1]);
      s.count = std::stoi(parts[2]);
      s.seed = parts.size() == 4 ? std::stoull(parts[3]) : 0;
      if (s.n < 2 || s.count < 1) throw std::invalid_argument("n/count");
      return s;
    }
    if (parts[0] == "file" && parts.size() >= 2) {
      s.kind = Scope::Kind::File;
      s.path = text.substr(5);
      return s;
    }
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::BadSpec,
              "scope must be exhaustive:N, random:N:COUNT:SEED or file:PATH; "
              "got '" + text + "'");
}

std::uint64_t labeled_tree_count(int n) {
  if (n <= 2) return 1;
  std::uint64_t c = 1;
  for (int i = 0; i < n - 2; ++i) c *= (std::uint64_t)n;
  return c;
}

Tree labeled_tree_at(int n, std::uint64_t index) {
  if (n == 1) return tree_from_edges(1, {});
  std::vector<int> code(n - 2);
  for (int pos = n - 3; pos >= 0; --pos) {
    code[pos] = (int)(index % n);
    index /= n;
  }
  return tree_from_prufer(code);
}

std::string tree_id(const Tree& t) {
  std::ostringstream os;
  os << "n=" << t.n << " prufer=[";
  if (t.n >= 2) {
    auto code = prufer_code(t);
    for (size_t i = 0; i < code.size(); ++i)
      os << (i ? "," : "") << code[i];
  }
  os << "]";
  return os.str();
}

SuiteResult run_tree_suite(const std::string& name, const Scope& scope,
                           const TreeCheck& check) {
  SuiteResult result;
  result.suite = name;

  // (n, index, detail) keyed so parallel execution reports deterministically.
  std::vector<std::tuple<int, std::uint64_t, Finding>> raw;

  auto check_one = [&](const Tree& t, int n, std::uint64_t idx) {
    std::vector<std::tuple<int, std::uint64_t, Finding>> keyed;
    // Exceptions must not escape the parallel region; surface them as
    // findings instead.
    try {
      for (auto& detail : check(t))
        keyed.emplace_back(n, idx, Finding{tree_id(t), detail});
    } catch (const std::exception& e) {
      keyed.emplace_back(n, idx,
                         Finding{tree_id(t), std::string("exception: ") +
                                                 e.what()});
    }
    return keyed;
  };

  switch (scope.kind) {
    case Scope::Kind::Exhaustive: {
      for (int n = 1; n <= scope.n; ++n) {
        const std::int64_t total = (std::int64_t)labeled_tree_count(n);
#pragma omp parallel for schedule(dynamic, 64)
        for (std::int64_t idx = 0; idx < total; ++idx) {
          auto t = labeled_tree_at(n, (std::uint64_t)idx);
          auto keyed = check_one(t, n, (std::uint64_t)idx);
          if (!keyed.empty()) {
#pragma omp critical
            raw.insert(raw.end(), keyed.begin(), keyed.end());
          }
        }
        result.trees += (std::uint64_t)total;
      }
      break;
    }
    case Scope::Kind::Random: {
      std::vector<std::uint64_t> seeds(scope.count);
      Rng rng(scope.seed);
      for (auto& s : seeds) s = rng.next();
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t i = 0; i < (std::int64_t)seeds.size(); ++i) {
        auto t = random_tree(scope.n, seeds[i]);
        auto keyed = check_one(t, scope.n, (std::uint64_t)i);
        if (!keyed.empty()) {
#pragma omp critical
          raw.insert(raw.end(), keyed.begin(), keyed.end());
        }
      }
      result.trees += (std::uint64_t)scope.count;
      break;
    }
    case Scope::Kind::File: {
      auto t = read_edge_list_file(scope.path);
      for (auto& f : check_one(t, t.n, 0)) raw.push_back(std::move(f));
      result.trees += 1;
      break;
    }
  }

  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
    return std::get<2>(a).detail < std::get<2>(b).detail;
  });
  for (auto& [n, idx, f] : raw) result.findings.push_back(std::move(f));
  return result;
}

std::vector<std::string> check_aidi(const Tree& t, int guard) {
  kernels::require_enumerable(t, guard);
  auto scan = kernels::scan_subsets_omp(t);
  auto p = dom_poly_dp(t);
  std::vector<std::string> out;
  for (int i = 1; i <= t.n; ++i) {
    mpz_class enumerated(scan.critical_sum[i]);
    mpz_class identity = i * p[i] - (t.n - i + 1) * p[i - 1];
    if (enumerated != identity)
      out.push_back("critical total at size " + std::to_string(i) + " is " +
                    enumerated.get_str() + ", identity gives " +
                    identity.get_str());
  }
  return out;
}

std::vector<std::string> check_bounds(const Tree& t, int guard) {
  kernels::require_enumerable(t, guard);
  auto scan = kernels::scan_subsets_omp(t);
  int gamma = 0, big_gamma = 0;
  for (int i = 0; i <= t.n; ++i)
    if (scan.dominating[i] > 0) {
      gamma = i;
      break;
    }
  for (int i = t.n; i >= 0; --i)
    if (scan.minimal[i] > 0) {
      big_gamma = i;
      break;
    }

  auto nbhd = kernels::closed_neighborhood_masks(t);
  std::vector<std::string> out;
  kernels::for_each_dominating_mask(t, -1, [&](std::uint64_t s) {
    int size = __builtin_popcountll(s);
    int crit = __builtin_popcountll(kernels::critical_mask(nbhd, s));
    if (crit < 2 * gamma - size || crit > 2 * big_gamma - size) {
      std::ostringstream os;
      os << "set {";
      auto ids = VertexSet::from_mask(t.n, s).ids();
      for (size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
      os << "} has " << crit << " critical vertices, outside ["
         << 2 * gamma - size << "," << 2 * big_gamma - size << "]";
      out.push_back(os.str());
      return out.size() < 8;  // cap spam per tree
    }
    return true;
  });
  return out;
}

std::vector<std::string> check_segments(const Tree& t, int guard) {
  auto p = dom_poly_dp(t);
  const int gamma = p.support_start();
  const int big_gamma = upper_domination_number(t, guard);
  std::vector<std::string> out;

  const int inc_end = increasing_chain_end(t.n, gamma);
  for (int i = gamma + 1; i <= inc_end && i <= t.n; ++i)
    if (p[i - 1] > p[i]) {
      out.push_back("nondecreasing chain broken at i=" + std::to_string(i));
      break;
    }

  const int dec_start = decreasing_chain_start(t.n, big_gamma);
  for (int i = dec_start + 1; i <= t.n; ++i)
    if (p[i - 1] < p[i]) {
      out.push_back("nonincreasing chain broken at i=" + std::to_string(i));
      break;
    }

  // The first index the chain actually constrains must agree with the
  // smallest integer i with 3i >= n + 2*Gamma + 1.
  const int derived_threshold = (t.n + 2 * big_gamma + 1 + 2) / 3;
  if (derived_threshold != dec_start + 1)
    out.push_back("chain start " + std::to_string(dec_start) +
                  " disagrees with derived threshold " +
                  std::to_string(derived_threshold));
  return out;
}

std::vector<std::string> check_corollary(const Tree& t, int guard) {
  auto p = dom_poly_dp(t);
  auto gap = verify_unimodal_gap(t, p, guard);
  if (gap.applicable && !gap.holds)
    return {"gap " + std::to_string(gap.big_gamma - gap.gamma) +
            " < 3 but polynomial is not unimodal"};
  return {};
}

std::vector<std::string> check_avd(const Tree& t, int guard) {
  auto p = dom_poly_dp(t);
  auto rep = avd_report(t, p, guard);
  auto via = avd_via_critical(t, guard);
  std::vector<std::string> out;
  if (rep.avd != via)
    out.push_back("avd " + rep.avd.get_str() +
                  " differs from critical-route value " + via.get_str());
  if (!rep.within_bounds)
    out.push_back("avd " + rep.avd.get_str() + " outside [" +
                  rep.lower_bound.get_str() + "," + rep.upper_bound.get_str() +
                  "]");
  return out;
}

std::vector<std::string> check_unimodality(const Tree& t) {
  auto p = dom_poly_dp(t);
  if (!analyze_sequence(p).unimodal) {
    std::string coeffs;
    for (int i = 0; i <= p.n; ++i)
      coeffs += (i ? "," : "") + p[i].get_str();
    return {"non-unimodal coefficient sequence [" + coeffs + "]"};
  }
  return {};
}

SuiteResult run_tk_suite(int k) {
  SuiteResult result;
  result.suite = "tk";
  result.trees = 1;
  auto cert = verify_tk_certificate(k);
  auto note = [&](const std::string& s) { result.notes.push_back(s); };
  note("k=" + std::to_string(k) + " n=" + std::to_string(cert.n) +
       " gamma=" + std::to_string(cert.gamma));
  note("d_gamma=" + cert.d_gamma.get_str() +
       " d_gamma+1=" + cert.d_gamma_plus_1.get_str() +
       " d_gamma+2=" + cert.d_gamma_plus_2.get_str());
  note("expected d_gamma+1=" + cert.expected_d_gamma_plus_1.get_str() +
       ", lower bound d_gamma+2=" + cert.lower_bound_d_gamma_plus_2.get_str());

  const std::string id = "t_k k=" + std::to_string(k);
  if (!cert.gamma_matches)
    result.findings.push_back({id, "support does not start at 3k+1"});
  if (!cert.unique_minimum)
    result.findings.push_back({id, "d_gamma != 1"});
  if (!cert.plus_1_matches)
    result.findings.push_back({id, "d_gamma+1 != 9k+3*2^k"});
  if (!cert.plus_2_at_least_bound)
    result.findings.push_back({id, "d_gamma+2 below its lower bound"});
  if (cert.violation_required && !cert.product_exceeds_square)
    result.findings.push_back({id, "expected log-concavity violation missing"});
  if (cert.product_exceeds_square)
    note("log-concavity fails at i=" + std::to_string(cert.gamma + 1));
  return result;
}

SuiteResult run_suite(const std::string& suite, const Scope& scope,
                      int guard) {
  // Guarded suites enumerate subsets; reject oversized scopes before the
  // parallel sweep starts.
  if (suite != "search" && scope.kind != Scope::Kind::File)
    kernels::require_n_enumerable(scope.n, guard);
  auto with_guard = [guard](std::vector<std::string> (*fn)(const Tree&, int)) {
    return [fn, guard](const Tree& t) { return fn(t, guard); };
  };
  if (suite == "aidi")
    return run_tree_suite(suite, scope, with_guard(check_aidi));
  if (suite == "bounds")
    return run_tree_suite(suite, scope, with_guard(check_bounds));
  if (suite == "segments")
    return run_tree_suite(suite, scope, with_guard(check_segments));
  if (suite == "corollary")
    return run_tree_suite(suite, scope, with_guard(check_corollary));
  if (suite == "avd")
    return run_tree_suite(suite, scope, with_guard(check_avd));
  if (suite == "search")
    return run_tree_suite(suite, scope, check_unimodality);
  throw Error(ErrorKind::BadSpec, "unknown suite '" + suite + "'");
}

std::vector<SuiteResult> run_suites(const std::string& suite,
                                    const Scope& scope, int guard) {
  if (suite != "all") return {run_suite(suite, scope, guard)};
  std::vector<SuiteResult> out;
  for (const char* s : {"aidi", "bounds", "segments", "corollary", "avd"})
    out.push_back(run_suite(s, scope, guard));
  return out;
}

}  // namespace domtree::verify
