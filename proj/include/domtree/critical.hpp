#ifndef DOMTREE_CRITICAL_HPP
#define DOMTREE_CRITICAL_HPP

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "domtree/domination.hpp"
#include "domtree/tree.hpp"
#include "domtree/vertex_set.hpp"

namespace domtree {

// Partition of the vertices induced by a dominating set S:
//   a          members of S whose removal breaks domination
//   a1 / a2    critical vertices with / without a neighbor in n1
//   n1 / n2    outside vertices with exactly one / at least two dominators
//   supported  S - a
struct CriticalDecomposition {
  VertexSet a, a1, a2, n1, n2, supported;
};

// Exactly the vertices of s whose removal leaves an undominated vertex.
VertexSet critical_set(const Tree& t, const VertexSet& s);

CriticalDecomposition decompose(const Tree& t, const VertexSet& s);

// Sum of |critical_set(S)| over all dominating sets of cardinality i,
// computed by direct enumeration (never through the counting identity this
// quantity is tested against).
mpz_class a_total(const Tree& t, int i, int guard = kDefaultGuard);

struct MatchingReport {
  int rho1 = 0;  // max matching n1 <-> a1 over tree edges
  int rho2 = 0;  // max matching n2 <-> a2 over tree edges
  int unmatched = 0;
  std::vector<std::pair<int, int>> matched_pairs;  // (outside, critical)
};

// Maximum bipartite matchings for a minimal dominating set m, found by
// augmenting-path search with ascending-id tie-breaking.
MatchingReport max_critical_matching(const Tree& t, const VertexSet& m);

}  // namespace domtree

#endif
