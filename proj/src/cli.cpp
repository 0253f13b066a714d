#include "domtree/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "domtree/analysis.hpp"
#include "domtree/critical.hpp"
#include "domtree/domination.hpp"
#include "domtree/error.hpp"
#include "domtree/json_out.hpp"
#include "domtree/reconfig.hpp"
#include "domtree/verify.hpp"

namespace domtree {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

long parse_long(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::BadSpec, "bad " + what + " '" + s + "'");
  }
}

void emit(const std::string& text, const std::string& out_path,
          std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw Error(ErrorKind::BadSpec, "cannot write " + out_path);
  f << text;
  if (!text.empty() && text.back() != '\n') f << "\n";
}

std::string poly_csv(const DomPoly& p) {
  std::ostringstream os;
  os << "i,d_i\n";
  for (int i = 0; i <= p.n; ++i) os << i << "," << p[i].get_str() << "\n";
  return os.str();
}

std::string poly_text(const DomPoly& p) {
  std::ostringstream os;
  os << "n = " << p.n << "\n";
  for (int i = 0; i <= p.n; ++i)
    os << "d_" << i << " = " << p[i].get_str() << "\n";
  return os.str();
}

json precondition_json(const PreconditionReport& rep) {
  json j{{"parent_condition_ok", rep.parent_condition_ok},
         {"nesting_condition_ok", rep.nesting_condition_ok}};
  j["parent_witness"] =
      rep.parent_witness ? json(*rep.parent_witness) : json(nullptr);
  j["nesting_witness"] =
      rep.nesting_witness
          ? json(json::array({rep.nesting_witness->first,
                              rep.nesting_witness->second}))
          : json(nullptr);
  return j;
}

}  // namespace

LabeledTree resolve_tree_input(const std::string& input, std::uint64_t seed) {
  auto parts = split(input, ':');
  const std::string& head = parts[0];
  if (head == "path" && parts.size() == 2)
    return {path_tree((int)parse_long(parts[1], "path order")), {}};
  if (head == "star" && parts.size() == 2)
    return {star_tree((int)parse_long(parts[1], "star order")), {}};
  if (head == "tk" && parts.size() == 2)
    return build_t_k((int)parse_long(parts[1], "k"));
  if (head == "random" && (parts.size() == 2 || parts.size() == 3)) {
    int n = (int)parse_long(parts[1], "order");
    std::uint64_t s =
        parts.size() == 3 ? (std::uint64_t)parse_long(parts[2], "seed") : seed;
    return {random_tree(n, s), {}};
  }
  if (head == "prufer" && parts.size() == 2) {
    std::vector<int> code;
    if (!parts[1].empty())
      for (const auto& piece : split(parts[1], ','))
        code.push_back((int)parse_long(piece, "code entry"));
    return {tree_from_prufer(code), {}};
  }
  if (parts.size() == 1) return {read_edge_list_file(input), {}};
  throw Error(ErrorKind::BadSpec, "unrecognized tree spec '" + input + "'");
}

namespace {

int cmd_gen(const std::string& spec, std::uint64_t seed,
            const std::string& out_path, std::ostream& out) {
  auto labeled = resolve_tree_input(spec, seed);
  std::ostringstream os;
  write_edge_list(os, labeled.tree, labeled.labels);
  emit(os.str(), out_path, out);
  return 0;
}

int cmd_poly(const std::string& input, const std::string& engine, int guard,
             const std::string& format, const std::string& out_path,
             std::ostream& out, std::ostream& err) {
  const Tree t = resolve_tree_input(input).tree;
  std::optional<DomPoly> dp, brute;
  if (engine == "dp" || engine == "both") dp = dom_poly_dp(t);
  if (engine == "brute" || engine == "both")
    brute = dom_poly_bruteforce(t, guard);
  if (engine == "both" && !(*dp == *brute)) {
    err << "EngineMismatch: dp and brute-force coefficients differ\n";
    for (int i = 0; i <= t.n; ++i)
      if (dp->coeffs[i] != brute->coeffs[i])
        err << "  d_" << i << ": dp=" << dp->coeffs[i].get_str()
            << " brute=" << brute->coeffs[i].get_str() << "\n";
    return 1;
  }
  const DomPoly& p = dp ? *dp : *brute;
  if (format == "json")
    emit(json_of(p).dump(2), out_path, out);
  else if (format == "csv")
    emit(poly_csv(p), out_path, out);
  else
    emit(poly_text(p), out_path, out);
  return 0;
}

int cmd_analyze(const std::string& input, int guard, const std::string& format,
                const std::string& out_path, std::ostream& out) {
  const Tree t = resolve_tree_input(input).tree;
  const DomPoly p = dom_poly_dp(t);
  const auto seq = analyze_sequence(p);
  const auto inc = verify_increasing_segment(t, p);

  json j{{"n", t.n},
         {"gamma", p.support_start()},
         {"poly", json_of(p)},
         {"sequence", json_of(seq)},
         {"increasing", json_of(inc)}};
  // The Gamma-dependent reports need subset enumeration; degrade gracefully
  // past the guard.
  try {
    j["big_gamma"] = upper_domination_number(t, guard);
    j["decreasing"] = json_of(verify_decreasing_segment(t, p, guard));
    j["unimodal_gap"] = json_of(verify_unimodal_gap(t, p, guard));
    j["avd"] = json_of(avd_report(t, p, guard));
    j["avd_via_critical"] = json_of(avd_via_critical(t, guard));
    j["guard_limited"] = false;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::GuardExceeded) throw;
    j["big_gamma"] = nullptr;
    j["decreasing"] = nullptr;
    j["unimodal_gap"] = nullptr;
    j["avd"] = nullptr;
    j["avd_via_critical"] = nullptr;
    j["guard_limited"] = true;
  }
  if (format == "text") {
    std::ostringstream os;
    os << poly_text(p) << "gamma = " << p.support_start() << "\n"
       << "unimodal = " << (seq.unimodal ? "yes" : "no") << "\n"
       << "log_concave = " << (seq.log_concave ? "yes" : "no") << "\n";
    emit(os.str(), out_path, out);
  } else {
    emit(j.dump(2), out_path, out);
  }
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& scope_text,
               std::uint64_t seed, int guard, const std::string& out_path,
               std::ostream& out) {
  std::vector<verify::SuiteResult> results;
  if (suite == "tk") {
    results.push_back(verify::run_tk_suite((int)parse_long(scope_text, "k")));
  } else {
    auto scope = verify::parse_scope(scope_text);
    if (scope.kind == verify::Scope::Kind::Random && scope.seed == 0)
      scope.seed = seed;
    results = verify::run_suites(suite, scope, guard);
  }
  json j = json::array();
  bool ok = true;
  for (const auto& r : results) {
    j.push_back(json_of(r));
    ok = ok && r.ok();
  }
  emit(j.dump(2), out_path, out);
  return ok ? 0 : 1;
}

int cmd_reconfig(const std::string& input, const std::string& set_text,
                 const std::string& mode, int root, bool force, int step_cap,
                 int guard, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
  (void)guard;
  const Tree t = resolve_tree_input(input).tree;
  const VertexSet set = parse_vertex_set(set_text, t.n);

  try {
    ReconfigTrace trace;
    if (mode == "minimalize") {
      trace = make_minimal(root_at(t, root), set, step_cap, force);
    } else if (mode.rfind("a1:", 0) == 0) {
      trace = reconfigure_a1(t, set, (int)parse_long(mode.substr(3), "a1 vertex"));
    } else if (mode.rfind("a2:", 0) == 0) {
      VertexSet x = parse_vertex_set(mode.substr(3), t.n);
      trace = reconfigure_a2_subset(t, set, x).trace;
    } else {
      throw Error(ErrorKind::BadSpec,
                  "mode must be minimalize, a1:V or a2:IDS");
    }
    json j = json_of(trace);
    j["decomposition"] = json_of(decompose(t, set));
    emit(j.dump(2), out_path, out);
    return 0;
  } catch (const PreconditionError& e) {
    json j{{"error", "PreconditionViolated"},
           {"detail", e.report().describe()},
           {"report", precondition_json(e.report())}};
    emit(j.dump(2), out_path, out);
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact domination polynomials, critical-vertex decompositions "
               "and minimal-dominating-set reconfiguration on trees"};
  app.require_subcommand(1);

  std::string input, out_path, format = "json", engine = "dp";
  std::string suite, scope, set_text, mode = "minimalize";
  int guard = kDefaultGuard, root = 0, step_cap = -1;
  std::uint64_t seed = 0;
  bool force = false;

  auto* gen = app.add_subcommand("gen", "generate a tree edge-list file");
  gen->add_option("spec", input, "path:N | star:N | tk:K | random:N[:SEED] | prufer:IDS")
      ->required();
  gen->add_option("--seed", seed, "seed for random:N");
  gen->add_option("--out", out_path, "output file (default stdout)");

  auto* poly = app.add_subcommand("poly", "domination polynomial");
  poly->add_option("input", input, "tree file or generator spec")->required();
  poly->add_option("--engine", engine, "dp | brute | both")
      ->check(CLI::IsMember({"dp", "brute", "both"}));
  poly->add_option("--guard", guard, "enumeration guard (default 25)");
  poly->add_option("--format", format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  poly->add_option("--out", out_path, "output file");

  auto* analyze = app.add_subcommand("analyze", "coefficient-sequence report");
  analyze->add_option("input", input, "tree file or generator spec")->required();
  analyze->add_option("--guard", guard, "enumeration guard");
  analyze->add_option("--format", format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  analyze->add_option("--out", out_path, "output file");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd
      ->add_option("suite", suite,
                   "aidi | bounds | segments | corollary | avd | tk | all")
      ->required();
  verify_cmd
      ->add_option("scope", scope,
                   "exhaustive:N | random:N:COUNT:SEED | file:PATH (k for tk)")
      ->required();
  verify_cmd->add_option("--seed", seed, "seed when the scope omits one");
  verify_cmd->add_option("--guard", guard, "enumeration guard");
  verify_cmd->add_option("--out", out_path, "output file");

  auto* reconfig = app.add_subcommand("reconfig", "reconfiguration trace");
  reconfig->add_option("input", input, "tree file or generator spec")
      ->required();
  reconfig->add_option("--set", set_text, "vertex ids, comma separated")
      ->required();
  reconfig->add_option("--mode", mode, "minimalize | a1:V | a2:IDS");
  reconfig->add_option("--root", root, "root vertex for minimalize");
  reconfig->add_flag("--force", force, "run despite failed preconditions");
  reconfig->add_option("--step-cap", step_cap, "swap limit (default 2n)");
  reconfig->add_option("--out", out_path, "output file");

  auto* search =
      app.add_subcommand("search", "hunt for unimodality violations");
  search->add_option("scope", scope, "exhaustive:N | random:N:COUNT:SEED")
      ->required();
  search->add_option("--seed", seed, "seed when the scope omits one");
  search->add_option("--out", out_path, "output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(input, seed, out_path, out);
    if (poly->parsed())
      return cmd_poly(input, engine, guard, format, out_path, out, err);
    if (analyze->parsed())
      return cmd_analyze(input, guard, format, out_path, out);
    if (verify_cmd->parsed())
      return cmd_verify(suite, scope, seed, guard, out_path, out);
    if (reconfig->parsed())
      return cmd_reconfig(input, set_text, mode, root, force, step_cap, guard,
                          out_path, out, err);
    if (search->parsed()) {
      auto sc = verify::parse_scope(scope);
      if (sc.kind == verify::Scope::Kind::Random && sc.seed == 0)
        sc.seed = seed;
      auto result = verify::run_suite("search", sc, guard);
      emit(json_of(result).dump(2), out_path, out);
      return result.ok() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.kind() == ErrorKind::GuardExceeded ? 3 : 2;
  }
  return 2;
}

}  // namespace domtree
