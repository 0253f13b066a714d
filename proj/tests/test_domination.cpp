#include <doctest.h>

#include <atomic>

#include "domtree/domination.hpp"
#include "domtree/error.hpp"
#include "domtree/rng.hpp"
#include "domtree/verify.hpp"
#include "oracles.hpp"

using namespace domtree;

namespace {

std::vector<mpz_class> coeffs(std::vector<long> v) {
  return std::vector<mpz_class>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("is_dominating") {
  Tree p3 = path_tree(3);
  CHECK(is_dominating(p3, VertexSet::of(3, {1})));
  CHECK_FALSE(is_dominating(p3, VertexSet::of(3, {0})));
  CHECK(is_dominating(p3, VertexSet::of(3, {0, 1, 2})));
  CHECK_FALSE(is_dominating(p3, VertexSet(3)));
  CHECK_THROWS_AS(is_dominating(p3, VertexSet(5)), Error);
}

TEST_CASE("dominating set enumeration") {
  Tree p3 = path_tree(3);
  auto sets = dominating_sets(p3);
  REQUIRE(sets.size() == 5);
  // Ascending bit-pattern order.
  CHECK(sets[0].ids() == std::vector<int>{1});
  CHECK(sets[1].ids() == std::vector<int>{0, 1});
  CHECK(sets[2].ids() == std::vector<int>{0, 2});
  CHECK(sets[3].ids() == std::vector<int>{1, 2});
  CHECK(sets[4].ids() == std::vector<int>{0, 1, 2});

  auto singles = dominating_sets(p3, 1);
  REQUIRE(singles.size() == 1);
  CHECK(singles[0].ids() == std::vector<int>{1});

  auto k1 = dominating_sets(tree_from_edges(1, {}));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0].ids() == std::vector<int>{0});

  // Streaming and collecting agree.
  std::vector<VertexSet> streamed;
  for_each_dominating_set(p3, {}, [&](const VertexSet& s) {
    streamed.push_back(s);
  });
  CHECK(streamed.size() == sets.size());
  for (size_t i = 0; i < sets.size(); ++i) CHECK(streamed[i] == sets[i]);
}

TEST_CASE("brute-force polynomial") {
  CHECK(dom_poly_bruteforce(tree_from_edges(1, {})).coeffs ==
        coeffs({0, 1}));
  CHECK(dom_poly_bruteforce(path_tree(3)).coeffs == coeffs({0, 1, 3, 1}));
  CHECK(dom_poly_bruteforce(path_tree(4)).coeffs == coeffs({0, 0, 4, 4, 1}));

  try {
    dom_poly_bruteforce(path_tree(30));
    FAIL("guard should trip");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GuardExceeded);
  }
  CHECK(dom_poly_bruteforce(path_tree(30), 30).n == 30);
}

TEST_CASE("dp polynomial matches examples and oracle") {
  CHECK(dom_poly_dp(path_tree(3)).coeffs == coeffs({0, 1, 3, 1}));
  CHECK(dom_poly_dp(star_tree(4)).coeffs == coeffs({0, 1, 3, 4, 1}));
  CHECK(dom_poly_dp(tree_from_edges(1, {})).coeffs == coeffs({0, 1}));

  for (int n = 2; n <= 6; ++n) {
    Tree t = random_tree(n + 4, 77 + n);
    auto d = oracle::dom_counts(t);
    auto p = dom_poly_dp(t);
    for (int i = 0; i <= t.n; ++i) CHECK(p[i] == d[i]);
  }
}

TEST_CASE("dp is rooting-invariant") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Tree t = random_tree(11, seed);
    DomPoly base = dom_poly_dp_rooted(root_at(t, 0));
    for (int r = 1; r < t.n; ++r)
      CHECK(dom_poly_dp_rooted(root_at(t, r)) == base);
  }
}

TEST_CASE("dp equals brute force, exhaustive n <= 6") {
  std::atomic<long> mismatches{0};
  for (int n = 1; n <= 6; ++n) {
    const std::int64_t total = (std::int64_t)verify::labeled_tree_count(n);
#pragma omp parallel for schedule(dynamic, 32)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      Tree t = verify::labeled_tree_at(n, (std::uint64_t)idx);
      if (!(dom_poly_dp(t) == dom_poly_bruteforce(t))) ++mismatches;
    }
  }
  CHECK(mismatches.load() == 0);
}

TEST_CASE("dp equals brute force, 500 random trees 9 <= n <= 18") {
  Rng rng(2024);
  std::vector<std::pair<int, std::uint64_t>> jobs;
  for (int i = 0; i < 500; ++i)
    jobs.emplace_back(rng.range(9, 18), rng.next());
  std::atomic<long> mismatches{0};
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < (std::int64_t)jobs.size(); ++i) {
    Tree t = random_tree(jobs[i].first, jobs[i].second);
    if (!(dom_poly_dp(t) == dom_poly_bruteforce(t))) ++mismatches;
  }
  CHECK(mismatches.load() == 0);
}

TEST_CASE("polynomial stanchions") {
  Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    Tree t = random_tree(rng.range(2, 14), rng.next());
    auto p = dom_poly_dp(t);
    CHECK(p[0] == 0);
    CHECK(p[t.n] == 1);
    int gamma = p.support_start();
    CHECK(p[gamma] >= 1);
    for (int j = 0; j < gamma; ++j) CHECK(p[j] == 0);
    for (int j = 0; j <= t.n; ++j) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), t.n, j);
      CHECK(p[j] <= binom);
    }
    // Counted sets equal the polynomial mass.
    if (t.n <= 14) {
      mpz_class total = 0;
      for (int j = 0; j <= t.n; ++j) total += p[j];
      CHECK(total == (long)dominating_sets(t).size());
    }
    // Known nondecreasing stretch up to ceil(n/2).
    for (int j = 1; j <= (t.n + 1) / 2; ++j) CHECK(p[j - 1] <= p[j]);
  }
}

TEST_CASE("gamma and Gamma") {
  Tree p4 = path_tree(4);
  CHECK(domination_number(p4) == 2);
  CHECK(upper_domination_number(p4) == 2);
  auto inv = dom_invariants(p4);
  CHECK(inv.gamma == 2);
  CHECK(inv.big_gamma == 2);

  auto minimal = minimal_dominating_sets(p4);
  REQUIRE(minimal.size() == 4);  // ascending mask order
  CHECK(minimal[0].ids() == std::vector<int>{0, 2});
  CHECK(minimal[1].ids() == std::vector<int>{1, 2});
  CHECK(minimal[2].ids() == std::vector<int>{0, 3});
  CHECK(minimal[3].ids() == std::vector<int>{1, 3});

  for (int k = 1; k <= 2; ++k)
    CHECK(domination_number(build_t_k(k).tree) == 3 * k + 1);
}

TEST_CASE("minimality") {
  Tree p3 = path_tree(3);
  CHECK(is_minimal_dominating(p3, VertexSet::of(3, {1})));
  CHECK_FALSE(is_minimal_dominating(p3, VertexSet::of(3, {0, 1})));
  CHECK_THROWS_AS(is_minimal_dominating(p3, VertexSet::of(3, {0})), Error);

  // The k=1 spider has a unique smallest dominating set.
  auto t1 = build_t_k(1);
  auto size4 = dominating_sets(t1.tree, 4);
  REQUIRE(size4.size() == 1);
  CHECK(size4[0].ids() ==
        std::vector<int>{t1.id_of("v0"), t1.id_of("y1_1"), t1.id_of("y2_1"),
                         t1.id_of("y3_1")});
  CHECK(is_minimal_dominating(t1.tree, size4[0]));
}

TEST_CASE("parallel collection preserves stream order") {
  Tree t = random_tree(12, 4242);
  auto collected = dominating_sets(t);
  std::vector<VertexSet> streamed;
  for_each_dominating_set(t, {}, [&](const VertexSet& s) {
    streamed.push_back(s);
  });
  REQUIRE(collected.size() == streamed.size());
  for (size_t i = 0; i < collected.size(); ++i)
    CHECK(collected[i] == streamed[i]);
}

TEST_CASE("serial and parallel kernels agree") {
  Rng rng(99);
  for (int i = 0; i < 12; ++i) {
    Tree t = random_tree(rng.range(2, 15), rng.next());
    CHECK(kernels::count_dominating_serial(t) ==
          kernels::count_dominating_omp(t));
    auto a = kernels::scan_subsets_serial(t);
    auto b = kernels::scan_subsets_omp(t);
    CHECK(a.dominating == b.dominating);
    CHECK(a.critical_sum == b.critical_sum);
    CHECK(a.minimal == b.minimal);
  }
}
