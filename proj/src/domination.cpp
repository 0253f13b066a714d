#include "domtree/domination.hpp"

#include <algorithm>

#include "domtree/error.hpp"

namespace domtree {

namespace {

void require_same_capacity(const Tree& t, const VertexSet& s) {
  if (s.capacity() != t.n)
    throw Error(ErrorKind::OutOfRange,
                "set capacity " + std::to_string(s.capacity()) +
                    " differs from tree order " + std::to_string(t.n));
}

// |N[u] & S| per vertex u.
std::vector<int> dominator_counts(const Tree& t, const VertexSet& s) {
  std::vector<int> cnt(t.n, 0);
  for (int v : s.ids()) {
    ++cnt[v];
    for (int w : t.adj[v]) ++cnt[w];
  }
  return cnt;
}

}  // namespace

bool is_dominating(const Tree& t, const VertexSet& s) {
  require_same_capacity(t, s);
  std::vector<char> covered(t.n, 0);
  for (int v : s.ids()) {
    covered[v] = 1;
    for (int w : t.adj[v]) covered[w] = 1;
  }
  for (char c : covered)
    if (!c) return false;
  return true;
}

void for_each_dominating_set(const Tree& t, std::optional<int> size,
                             const std::function<void(const VertexSet&)>& fn,
                             int guard) {
  kernels::require_enumerable(t, guard);
  kernels::for_each_dominating_mask(t, size.value_or(-1),
                                    [&](std::uint64_t m) {
                                      fn(VertexSet::from_mask(t.n, m));
                                      return true;
                                    });
}

std::vector<VertexSet> dominating_sets(const Tree& t, std::optional<int> size,
                                       int guard) {
  kernels::require_enumerable(t, guard);
  auto masks = kernels::collect_dominating_masks(t, size.value_or(-1));
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) out.push_back(VertexSet::from_mask(t.n, m));
  return out;
}

DomPoly dom_poly_bruteforce(const Tree& t, int guard) {
  kernels::require_enumerable(t, guard);
  auto counts = kernels::count_dominating_omp(t);
  DomPoly p;
  p.n = t.n;
  p.coeffs.reserve(t.n + 1);
  for (std::uint64_t c : counts) p.coeffs.emplace_back(mpz_class(c));
  return p;
}

namespace {

using Poly = std::vector<mpz_class>;  // zero polynomial == empty vector

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return r;
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Poly sub(const Poly& a, const Poly& b) {  // requires a >= b coefficientwise
  Poly r = a;
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

Poly shift_up(Poly a) {  // multiply by x
  if (a.empty()) return {};
  a.insert(a.begin(), mpz_class(0));
  return a;
}

}  // namespace

DomPoly dom_poly_dp_rooted(const RootedTree& rt) {
  const int n = rt.n();
  // Per vertex: counts split by the vertex's own status once its subtree is
  // otherwise fully dominated.
  std::vector<Poly> in_set(n);        // v in S
  std::vector<Poly> covered(n);       // v not in S, dominated from below
  std::vector<Poly> open(n);          // v not in S, not yet dominated

  // Reverse BFS order puts every child before its parent.
  for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it) {
    int v = *it;
    if (rt.children[v].empty()) {
      in_set[v] = {mpz_class(0), mpz_class(1)};
      covered[v] = {};
      open[v] = {mpz_class(1)};
      continue;
    }
    Poly any{mpz_class(1)}, settled{mpz_class(1)}, all_covered{mpz_class(1)};
    for (int c : rt.children[v]) {
      Poly handled = add(in_set[c], covered[c]);
      any = mul(any, add(handled, open[c]));
      settled = mul(settled, handled);
      all_covered = mul(all_covered, covered[c]);
      in_set[c].clear();
      covered[c].clear();
      open[c].clear();
    }
    in_set[v] = shift_up(std::move(any));
    covered[v] = sub(settled, all_covered);  // at least one child in S
    open[v] = std::move(all_covered);
  }

  DomPoly p;
  p.n = n;
  Poly total = add(in_set[rt.root], covered[rt.root]);
  total.resize(n + 1);
  p.coeffs = std::move(total);
  return p;
}

DomPoly dom_poly_dp(const Tree& t) { return dom_poly_dp_rooted(root_at(t, 0)); }

int domination_number(const Tree& t) { return dom_poly_dp(t).support_start(); }

int upper_domination_number(const Tree& t, int guard) {
  kernels::require_enumerable(t, guard);
  auto scan = kernels::scan_subsets_omp(t);
  for (int i = t.n; i >= 0; --i)
    if (scan.minimal[i] > 0) return i;
  return t.n;  // unreachable: V itself dominates, so some minimal set exists
}

DomInvariants dom_invariants(const Tree& t, int guard) {
  DomInvariants inv;
  inv.gamma = domination_number(t);
  inv.big_gamma = upper_domination_number(t, guard);
  return inv;
}

bool is_minimal_dominating(const Tree& t, const VertexSet& s) {
  require_same_capacity(t, s);
  if (!is_dominating(t, s))
    throw Error(ErrorKind::NotDominating, "set is not dominating");
  auto cnt = dominator_counts(t, s);
  // v in S stays required exactly when some u in N[v] has v as its only
  // dominator; with closed neighborhoods that reduces to cnt[u] == 1.
  for (int v : s.ids()) {
    bool critical = (cnt[v] == 1);
    if (!critical)
      for (int w : t.adj[v])
        if (!s.contains(w) && cnt[w] == 1) {
          critical = true;
          break;
        }
    if (!critical) return false;
  }
  return true;
}

void for_each_minimal_dominating_set(
    const Tree& t, const std::function<void(const VertexSet&)>& fn,
    int guard) {
  kernels::require_enumerable(t, guard);
  auto nbhd = kernels::closed_neighborhood_masks(t);
  kernels::for_each_dominating_mask(t, -1, [&](std::uint64_t m) {
    if (kernels::critical_mask(nbhd, m) == m)
      fn(VertexSet::from_mask(t.n, m));
    return true;
  });
}

std::vector<VertexSet> minimal_dominating_sets(const Tree& t, int guard) {
  std::vector<VertexSet> out;
  for_each_minimal_dominating_set(
      t, [&](const VertexSet& s) { out.push_back(s); }, guard);
  return out;
}

}  // namespace domtree
