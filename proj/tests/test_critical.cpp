#include <doctest.h>

#include "domtree/critical.hpp"
#include "domtree/error.hpp"
#include "domtree/rng.hpp"
#include "domtree/verify.hpp"
#include "oracles.hpp"

using namespace domtree;

namespace {

// Shared small corpus: every labeled tree up to 6 vertices plus a seeded
// sample of larger ones.
std::vector<Tree> small_corpus() {
  std::vector<Tree> out;
  for (int n = 1; n <= 6; ++n)
    for (std::uint64_t i = 0; i < verify::labeled_tree_count(n); ++i)
      out.push_back(verify::labeled_tree_at(n, i));
  Rng rng(31);
  for (int i = 0; i < 25; ++i)
    out.push_back(random_tree(rng.range(7, 12), rng.next()));
  return out;
}

}  // namespace

TEST_CASE("critical_set basics") {
  Tree p3 = path_tree(3);
  CHECK(critical_set(p3, VertexSet::of(3, {1})).ids() == std::vector<int>{1});
  CHECK(critical_set(p3, VertexSet::of(3, {0, 1, 2})).empty());
  Tree p4 = path_tree(4);
  CHECK(critical_set(p4, VertexSet::of(4, {0, 1, 2})).ids() ==
        std::vector<int>{2});
  CHECK_THROWS_AS(critical_set(p3, VertexSet::of(3, {0})), Error);
}

TEST_CASE("critical_set equals the removal oracle") {
  for (const Tree& t : small_corpus()) {
    if (t.n > 10) continue;
    for_each_dominating_set(t, {}, [&](const VertexSet& s) {
      CHECK(critical_set(t, s).ids() == oracle::critical(t, s.ids()));
    });
  }
}

TEST_CASE("decompose examples") {
  Tree p4 = path_tree(4);
  auto d = decompose(p4, VertexSet::of(4, {1, 2}));
  CHECK(d.n1.ids() == std::vector<int>{0, 3});
  CHECK(d.n2.empty());
  CHECK(d.a1.ids() == std::vector<int>{1, 2});
  CHECK(d.a2.empty());
  CHECK(d.supported.empty());

  Tree p3 = path_tree(3);
  auto d3 = decompose(p3, VertexSet::of(3, {1}));
  CHECK(d3.n1.ids() == std::vector<int>{0, 2});
  CHECK(d3.a1.ids() == std::vector<int>{1});
  CHECK(d3.a2.empty());

  Tree star = star_tree(4);
  auto ds = decompose(star, VertexSet::of(4, {0}));
  CHECK(ds.n1.ids() == std::vector<int>{1, 2, 3});
  CHECK(ds.a1.ids() == std::vector<int>{0});
}

TEST_CASE("decomposition invariants hold on every dominating set") {
  for (const Tree& t : small_corpus()) {
    for_each_dominating_set(t, {}, [&](const VertexSet& s) {
      auto d = decompose(t, s);
      CHECK((d.a1 | d.a2) == d.a);
      CHECK((d.a1 & d.a2).empty());
      CHECK(d.a.is_subset_of(s));
      CHECK(d.supported == (s - d.a));
      for (int v = 0; v < t.n; ++v)
        if (!s.contains(v))
          CHECK((d.n1.contains(v) || d.n2.contains(v)));
      CHECK_FALSE(d.n1.intersects(d.n2));
      CHECK_FALSE(d.n1.intersects(s));
      CHECK_FALSE(d.n2.intersects(s));

      // Membership criteria, re-derived.
      for (int v : d.n1.ids()) {
        int dominators = 0;
        for (int w : t.adj[v]) dominators += s.contains(w);
        CHECK(dominators == 1);
      }
      for (int v : d.n2.ids()) {
        int dominators = 0;
        for (int w : t.adj[v]) dominators += s.contains(w);
        CHECK(dominators >= 2);
      }
      for (int v : d.a1.ids()) {
        bool touches = false;
        for (int w : t.adj[v]) touches |= d.n1.contains(w);
        CHECK(touches);
      }
      for (int v : d.a2.ids()) {
        for (int w : t.adj[v]) CHECK_FALSE(d.n1.contains(w));
      }
    });
  }
}

TEST_CASE("isolated members are critical; a2 members are isolated") {
  for (const Tree& t : small_corpus()) {
    for_each_dominating_set(t, {}, [&](const VertexSet& s) {
      auto d = decompose(t, s);
      for (int v : s.ids()) {
        bool has_set_neighbor = false;
        for (int w : t.adj[v]) has_set_neighbor |= s.contains(w);
        if (!has_set_neighbor) CHECK(d.a.contains(v));
      }
      // Members of a2 have no neighbor in S, and every neighbor lands in n2.
      for (int v : d.a2.ids())
        for (int w : t.adj[v]) {
          CHECK_FALSE(s.contains(w));
          CHECK(d.n2.contains(w));
        }
    });
  }
}

TEST_CASE("a1 is never larger than n1") {
  for (const Tree& t : small_corpus()) {
    for_each_dominating_set(t, {}, [&](const VertexSet& s) {
      auto d = decompose(t, s);
      CHECK(d.a1.size() <= d.n1.size());
    });
  }
}

TEST_CASE("critical totals by enumeration and by identity") {
  Tree p4 = path_tree(4);
  CHECK(a_total(p4, 3) == 4);

  // Identity instance at i = 3 for the path: 3*d_3 - 2*d_2 = 12 - 8.
  auto p = dom_poly_dp(p4);
  CHECK(a_total(p4, 3) == 3 * p[3] - 2 * p[2]);

  for (const Tree& t : small_corpus()) {
    if (t.n > 9) continue;
    auto poly = dom_poly_dp(t);
    for (int i = 1; i <= t.n; ++i)
      CHECK(a_total(t, i) == i * poly[i] - (t.n - i + 1) * poly[i - 1]);
    // Top degree: a(T,n) = n*d_n - d_{n-1}.
    CHECK(a_total(t, t.n) == t.n * poly[t.n] - poly[t.n - 1]);
  }
}

TEST_CASE("critical size bounds") {
  for (const Tree& t : small_corpus()) {
    auto inv = dom_invariants(t);
    for_each_dominating_set(t, {}, [&](const VertexSet& s) {
      int crit = critical_set(t, s).size();
      CHECK(crit >= 2 * inv.gamma - s.size());
      CHECK(crit <= 2 * inv.big_gamma - s.size());
    });
  }
}

TEST_CASE("critical matchings") {
  Tree p4 = path_tree(4);
  auto rep = max_critical_matching(p4, VertexSet::of(4, {1, 3}));
  CHECK(rep.rho1 == 1);
  CHECK(rep.rho2 == 1);
  CHECK(rep.unmatched == 0);
  REQUIRE(rep.matched_pairs.size() == 2);
  CHECK(rep.matched_pairs[0] == std::pair<int, int>{0, 1});
  CHECK(rep.matched_pairs[1] == std::pair<int, int>{2, 3});

  Tree k2 = path_tree(2);
  auto rep2 = max_critical_matching(k2, VertexSet::of(2, {0}));
  CHECK(rep2.rho1 == 1);
  CHECK(rep2.unmatched == 0);

  CHECK_THROWS_AS(max_critical_matching(p4, VertexSet::of(4, {0, 1, 2})),
                  Error);
}

TEST_CASE("matching sizes match the exhaustive oracle") {
  Rng rng(17);
  int tried = 0;
  while (tried < 60) {
    Tree t = random_tree(rng.range(4, 11), rng.next());
    auto sets = minimal_dominating_sets(t);
    const auto& m = sets[rng.below(sets.size())];
    auto d = decompose(t, m);
    auto rep = max_critical_matching(t, m);
    CHECK(rep.rho1 == oracle::max_matching(t, d.n1.ids(), d.a1.ids()));
    CHECK(rep.rho2 == oracle::max_matching(t, d.n2.ids(), d.a2.ids()));
    for (auto [outside, critical] : rep.matched_pairs) {
      CHECK_FALSE(m.contains(outside));
      CHECK(m.contains(critical));
      bool edge = false;
      for (int w : t.adj[outside]) edge |= (w == critical);
      CHECK(edge);
    }
    ++tried;
  }
}

TEST_CASE("largest minimal sets have saturated matchings") {
  for (int n = 1; n <= 7; ++n) {
    for (std::uint64_t i = 0; i < verify::labeled_tree_count(n); ++i) {
      Tree t = verify::labeled_tree_at(n, i);
      int big_gamma = upper_domination_number(t);
      for_each_minimal_dominating_set(t, [&](const VertexSet& m) {
        auto rep = max_critical_matching(t, m);
        CHECK(rep.unmatched <= 2 * (big_gamma - m.size()));
        if (m.size() == big_gamma) {
          CHECK(rep.unmatched == 0);
          auto d = decompose(t, m);
          CHECK(d.a1.size() == d.n1.size());
          // Hall condition toward a2 over every subset of n2.
          auto n2 = d.n2.ids();
          for (std::uint64_t x = 1; x < (std::uint64_t{1} << n2.size());
               ++x) {
            VertexSet hit(t.n);
            int picked = 0;
            for (size_t b = 0; b < n2.size(); ++b)
              if ((x >> b) & 1) {
                ++picked;
                for (int w : t.adj[n2[b]])
                  if (d.a2.contains(w)) hit.insert(w);
              }
            CHECK(picked <= hit.size());
          }
        }
      });
    }
  }
}
