#ifndef DOMTREE_DOM_POLY_HPP
#define DOMTREE_DOM_POLY_HPP

#include <gmpxx.h>

#include <vector>

namespace domtree {

// Coefficient vector of the domination polynomial: coeffs[i] counts the
// dominating sets of cardinality i, exact at any scale.
struct DomPoly {
  int n = 0;
  std::vector<mpz_class> coeffs;  // size n+1

  const mpz_class& operator[](int i) const { return coeffs[i]; }

  // Smallest i with coeffs[i] > 0.
  int support_start() const {
    for (int i = 0; i <= n; ++i)
      if (coeffs[i] > 0) return i;
    return n;
  }

  bool operator==(const DomPoly& o) const {
    return n == o.n && coeffs == o.coeffs;
  }
};

}  // namespace domtree

#endif
