#include "domtree/critical.hpp"

#include <string>

#include "domtree/error.hpp"
#include "domtree/kernels.hpp"

namespace domtree {

namespace {

std::vector<int> dominator_counts(const Tree& t, const VertexSet& s) {
  std::vector<int> cnt(t.n, 0);
  for (int v : s.ids()) {
    ++cnt[v];
    for (int w : t.adj[v]) ++cnt[w];
  }
  return cnt;
}

void require_dominating(const Tree& t, const VertexSet& s) {
  if (!is_dominating(t, s))
    throw Error(ErrorKind::NotDominating, "set is not dominating");
}

}  // namespace

VertexSet critical_set(const Tree& t, const VertexSet& s) {
  require_dominating(t, s);
  auto cnt = dominator_counts(t, s);
  VertexSet crit(t.n);
  // A singly-dominated vertex pins its unique dominator.
  for (int u = 0; u < t.n; ++u) {
    if (cnt[u] != 1) continue;
    if (s.contains(u)) {
      crit.insert(u);
      continue;
    }
    for (int w : t.adj[u])
      if (s.contains(w)) {
        crit.insert(w);
        break;
      }
  }
  return crit;
}

CriticalDecomposition decompose(const Tree& t, const VertexSet& s) {
  require_dominating(t, s);
  auto cnt = dominator_counts(t, s);
  CriticalDecomposition d{VertexSet(t.n), VertexSet(t.n), VertexSet(t.n),
                          VertexSet(t.n), VertexSet(t.n), VertexSet(t.n)};
  for (int u = 0; u < t.n; ++u) {
    if (s.contains(u)) continue;
    if (cnt[u] == 1)
      d.n1.insert(u);
    else
      d.n2.insert(u);
  }
  for (int u = 0; u < t.n; ++u) {
    if (cnt[u] != 1) continue;
    if (s.contains(u)) {
      d.a.insert(u);
    } else {
      for (int w : t.adj[u])
        if (s.contains(w)) {
          d.a.insert(w);
          break;
        }
    }
  }
  for (int v : d.a.ids()) {
    bool touches_n1 = false;
    for (int w : t.adj[v])
      if (d.n1.contains(w)) {
        touches_n1 = true;
        break;
      }
    (touches_n1 ? d.a1 : d.a2).insert(v);
  }
  d.supported = s - d.a;
  return d;
}

mpz_class a_total(const Tree& t, int i, int guard) {
  if (i < 0 || i > t.n)
    throw Error(ErrorKind::OutOfRange, "size " + std::to_string(i));
  kernels::require_enumerable(t, guard);
  auto scan = kernels::scan_subsets_omp(t);
  return mpz_class(scan.critical_sum[i]);
}

namespace {

// Kuhn's augmenting-path matching on tree edges between 'outside' and
// 'inside' vertex classes. Instances are tiny; determinism matters more than
// asymptotics here.
struct BipartiteMatcher {
  const Tree& t;
  const VertexSet& outside;
  const VertexSet& inside;
  std::vector<int> match_of_inside;   // inside vertex -> outside vertex
  std::vector<int> match_of_outside;  // outside vertex -> inside vertex

  BipartiteMatcher(const Tree& tree, const VertexSet& out, const VertexSet& in)
      : t(tree), outside(out), inside(in),
        match_of_inside(tree.n, -1), match_of_outside(tree.n, -1) {}

  bool augment(int u, std::vector<char>& visited) {
    for (int w : t.adj[u]) {
      if (!inside.contains(w) || visited[w]) continue;
      visited[w] = 1;
      if (match_of_inside[w] == -1 || augment(match_of_inside[w], visited)) {
        match_of_inside[w] = u;
        match_of_outside[u] = w;
        return true;
      }
    }
    return false;
  }

  int run() {
    int size = 0;
    for (int u : outside.ids()) {
      std::vector<char> visited(t.n, 0);
      if (augment(u, visited)) ++size;
    }
    return size;
  }
};

}  // namespace

MatchingReport max_critical_matching(const Tree& t, const VertexSet& m) {
  if (!is_minimal_dominating(t, m))
    throw Error(ErrorKind::NotMinimal, "set is not a minimal dominating set");
  auto dec = decompose(t, m);

  MatchingReport rep;
  BipartiteMatcher m1(t, dec.n1, dec.a1);
  rep.rho1 = m1.run();
  BipartiteMatcher m2(t, dec.n2, dec.a2);
  rep.rho2 = m2.run();
  rep.unmatched = (dec.n1.size() - rep.rho1) + (dec.n2.size() - rep.rho2);
  for (int u : dec.n1.ids())
    if (m1.match_of_outside[u] != -1)
      rep.matched_pairs.emplace_back(u, m1.match_of_outside[u]);
  for (int u : dec.n2.ids())
    if (m2.match_of_outside[u] != -1)
      rep.matched_pairs.emplace_back(u, m2.match_of_outside[u]);
  return rep;
}

}  // namespace domtree
