#ifndef DOMTREE_ANALYSIS_HPP
#define DOMTREE_ANALYSIS_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "domtree/dom_poly.hpp"
#include "domtree/domination.hpp"
#include "domtree/tree.hpp"

namespace domtree {

struct SequenceReport {
  bool unimodal = false;
  std::vector<int> mode_indices;  // every index achieving the max coefficient
  bool log_concave = false;
  std::optional<int> first_lc_violation;  // smallest i with d_i^2 < d_{i-1}d_{i+1}
  int increasing_prefix_end = 0;   // largest j with d nondecreasing on [gamma..j]
  int decreasing_suffix_start = 0; // smallest j with d nonincreasing on [j..n]
};

// Unimodality is judged on [support_start..n]; the structural zeros below the
// first nonzero coefficient are not treated as violations.
SequenceReport analyze_sequence(const DomPoly& p);

struct SegmentCheck {
  bool holds = false;
  int chain_from = 0;  // chain covers d_chain_from ... d_chain_to
  int chain_to = 0;
};

// Nondecreasing chain d_gamma <= ... <= d_floor((n+2*gamma+1)/3).
SegmentCheck verify_increasing_segment(const Tree& t, const DomPoly& p);
// Nonincreasing chain d_ceil((n+2*Gamma-2)/3) >= ... >= d_n.
SegmentCheck verify_decreasing_segment(const Tree& t, const DomPoly& p,
                                       int guard = kDefaultGuard);

int increasing_chain_end(int n, int gamma);
int decreasing_chain_start(int n, int big_gamma);

struct GapCheck {
  bool applicable = false;  // big_gamma - gamma < 3
  bool holds = true;        // unimodal whenever applicable
  int gamma = 0;
  int big_gamma = 0;
};

GapCheck verify_unimodal_gap(const Tree& t, const DomPoly& p,
                             int guard = kDefaultGuard);

struct AvdReport {
  mpq_class avd;          // sum of i*d_i over sum of d_i, exact
  mpq_class lower_bound;  // (n + 2*gamma)/3
  mpq_class upper_bound;  // (n + 2*big_gamma)/3
  bool within_bounds = false;
};

AvdReport avd_report(const Tree& t, const DomPoly& p,
                     int guard = kDefaultGuard);

// Same average through the critical-vertex route: n/2 plus half the mean
// critical count, by direct enumeration. Must equal avd_report().avd exactly.
mpq_class avd_via_critical(const Tree& t, int guard = kDefaultGuard);

struct TkCertificate {
  int k = 0;
  int n = 0;
  int gamma = 0;  // 3k+1
  mpz_class d_gamma, d_gamma_plus_1, d_gamma_plus_2;
  mpz_class expected_d_gamma_plus_1;     // 9k + 3*2^k
  mpz_class lower_bound_d_gamma_plus_2;  // 3(5k+k^2)2^k + 3(k+1)2^{2k} + 2^{3k}
  bool gamma_matches = false;
  bool unique_minimum = false;      // d_gamma == 1
  bool plus_1_matches = false;
  bool plus_2_at_least_bound = false;
  bool product_exceeds_square = false;  // d_gamma * d_{gamma+2} > d_{gamma+1}^2
  bool violation_required = false;      // k >= 4
  std::optional<int> first_lc_violation;

  bool ok() const {
    return gamma_matches && unique_minimum && plus_1_matches &&
           plus_2_at_least_bound &&
           (!violation_required || product_exceeds_square);
  }
};

// Computes the polynomial of the k-spider and checks the exact coefficient
// claims at gamma and gamma+1, the lower bound at gamma+2, and (for k >= 4)
// the log-concavity violation they force.
TkCertificate verify_tk_certificate(int k);

}  // namespace domtree

#endif
