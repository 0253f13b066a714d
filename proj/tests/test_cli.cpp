#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "domtree/cli.hpp"
#include "domtree/json_out.hpp"

using namespace domtree;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen emits parseable edge lists") {
  auto r = run({"gen", "path:4"});
  CHECK(r.code == 0);
  std::istringstream is(r.out);
  CHECK(read_edge_list(is).n == 4);

  auto tk = run({"gen", "tk:4"});
  CHECK(tk.code == 0);
  CHECK(tk.out.find("40\n") != std::string::npos);
  CHECK(tk.out.find("# label v0 0") != std::string::npos);

  auto seeded = run({"gen", "random:10", "--seed", "7"});
  auto inline_seed = run({"gen", "random:10:7"});
  CHECK(seeded.out == inline_seed.out);

  CHECK(run({"gen", "bogus:4"}).code == 2);
}

TEST_CASE("poly formats and engines") {
  auto r = run({"poly", "path:3", "--engine", "both"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["n"] == 3);
  CHECK(j["coeffs"] == json::array({"0", "1", "3", "1"}));

  auto csv = run({"poly", "path:3", "--format", "csv"});
  CHECK(csv.out == "i,d_i\n0,0\n1,1\n2,3\n3,1\n");

  auto guarded = run({"poly", "path:30", "--engine", "brute"});
  CHECK(guarded.code == 3);
  auto lifted = run({"poly", "path:26", "--engine", "dp"});
  CHECK(lifted.code == 0);
}

TEST_CASE("deterministic output bytes") {
  auto a = run({"verify", "aidi", "exhaustive:5"});
  auto b = run({"verify", "aidi", "exhaustive:5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  auto p1 = run({"poly", "tk:2"});
  auto p2 = run({"poly", "tk:2"});
  CHECK(p1.out == p2.out);
}

TEST_CASE("analyze reports") {
  auto r = run({"analyze", "tk:1"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["gamma"] == 4);
  CHECK(j["guard_limited"] == false);
  CHECK(j["sequence"]["unimodal"] == true);
  CHECK(j["avd"]["within_bounds"] == true);

  auto big = run({"analyze", "path:40"});
  CHECK(big.code == 0);
  auto jb = json::parse(big.out);
  CHECK(jb["guard_limited"] == true);
  CHECK(jb["big_gamma"].is_null());
  CHECK(jb["gamma"] == 14);  // ceil(40/3)
}

TEST_CASE("verify suites and exit codes") {
  auto r = run({"verify", "all", "exhaustive:5"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j.is_array());
  CHECK(j.size() == 5);
  for (const auto& suite : j) CHECK(suite["ok"] == true);

  auto tk = run({"verify", "tk", "4"});
  CHECK(tk.code == 0);

  auto seg = run({"verify", "segments", "random:9:20:3"});
  CHECK(seg.code == 0);
  CHECK(json::parse(seg.out)[0]["trees"] == 20);

  CHECK(run({"verify", "nonsense", "exhaustive:4"}).code == 2);
  CHECK(run({"verify", "aidi", "exhaustive:30"}).code == 3);
  CHECK(run({"verify", "aidi", "bogus"}).code == 2);
}

TEST_CASE("search finds nothing on small trees") {
  auto r = run({"search", "exhaustive:6"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["findings"].empty());
  CHECK(j["trees"] == 1442);
}

TEST_CASE("reconfig command") {
  const std::string tree = std::string(FIXTURE_DIR) + "/alg1_tree.txt";
  auto r = run({"reconfig", tree, "--set", "1,2,5,6,8,11,15,16", "--mode",
                "minimalize", "--root", "0"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["terminated"] == true);
  CHECK(j["steps"].size() == 2);
  CHECK(j["steps"][0]["u"] == 1);
  CHECK(j["steps"][0]["A"] == json::array({2}));
  CHECK(j["steps"][0]["N"] == json::array({3, 13}));
  CHECK(j["output"].size() == 9);

  // Empty trace on an already-minimal input.
  auto idle = run({"reconfig", "path:3", "--set", "1", "--mode", "minimalize"});
  CHECK(idle.code == 0);
  CHECK(json::parse(idle.out)["steps"].empty());

  // Violated preconditions: report plus exit 2, unless forced.
  auto bad = run({"reconfig", "path:4", "--set", "0,1,2", "--mode",
                  "minimalize", "--root", "0"});
  CHECK(bad.code == 2);
  auto jb = json::parse(bad.out);
  CHECK(jb["error"] == "PreconditionViolated");
  CHECK(jb["report"]["parent_witness"] == 1);
  auto forced = run({"reconfig", "path:4", "--set", "0,1,2", "--mode",
                     "minimalize", "--root", "0", "--force"});
  CHECK(forced.code == 0);
  CHECK(json::parse(forced.out)["preconditions_ok"] == false);

  // Dependent a2 subset is rejected.
  auto dep = run({"reconfig", "prufer:2,2,3,3", "--set", "0,1,4,5", "--mode",
                  "a2:2,3"});
  CHECK(dep.code == 2);
}

TEST_CASE("report schemas") {
  // Decomposition of the input set rides along with every trace.
  auto r = run({"reconfig", "path:4", "--set", "1,3", "--mode", "a1:1"});
  CHECK(r.code == 0);
  auto d = json::parse(r.out)["decomposition"];
  CHECK(d["a1"] == json::array({1}));
  CHECK(d["a2"] == json::array({3}));
  CHECK(d["n1"] == json::array({0}));
  CHECK(d["n2"] == json::array({2}));
  CHECK(d["supported"] == json::array());

  auto m = max_critical_matching(path_tree(4), VertexSet::of(4, {1, 3}));
  auto jm = json_of(m);
  CHECK(jm["rho1"] == 1);
  CHECK(jm["rho2"] == 1);
  CHECK(jm["unmatched"] == 0);
  CHECK(jm["matched_pairs"] == json::array({{0, 1}, {2, 3}}));
}
