#ifndef DOMTREE_DOMINATION_HPP
#define DOMTREE_DOMINATION_HPP

#include <functional>
#include <optional>
#include <vector>

#include "domtree/dom_poly.hpp"
#include "domtree/kernels.hpp"
#include "domtree/tree.hpp"
#include "domtree/vertex_set.hpp"

namespace domtree {

using kernels::kDefaultGuard;

struct DomInvariants {
  int gamma = 0;      // smallest dominating set size
  int big_gamma = 0;  // largest minimal dominating set size
};

bool is_dominating(const Tree& t, const VertexSet& s);

// Every dominating set (optionally restricted to one cardinality) exactly
// once, in ascending bit-pattern order. The callback form streams serially;
// the vector form collects with the parallel kernel.
void for_each_dominating_set(const Tree& t, std::optional<int> size,
                             const std::function<void(const VertexSet&)>& fn,
                             int guard = kDefaultGuard);
std::vector<VertexSet> dominating_sets(const Tree& t,
                                       std::optional<int> size = {},
                                       int guard = kDefaultGuard);

// Full-subset-enumeration oracle.
DomPoly dom_poly_bruteforce(const Tree& t, int guard = kDefaultGuard);

// Subtree dynamic program; must match the oracle coefficient-for-coefficient.
// Rooted at vertex 0 (the answer is rooting-invariant).
DomPoly dom_poly_dp(const Tree& t);
DomPoly dom_poly_dp_rooted(const RootedTree& rt);

int domination_number(const Tree& t);  // gamma, from the DP polynomial
int upper_domination_number(const Tree& t, int guard = kDefaultGuard);  // Gamma
DomInvariants dom_invariants(const Tree& t, int guard = kDefaultGuard);

bool is_minimal_dominating(const Tree& t, const VertexSet& s);
void for_each_minimal_dominating_set(
    const Tree& t, const std::function<void(const VertexSet&)>& fn,
    int guard = kDefaultGuard);
std::vector<VertexSet> minimal_dominating_sets(const Tree& t,
                                               int guard = kDefaultGuard);

}  // namespace domtree

#endif
