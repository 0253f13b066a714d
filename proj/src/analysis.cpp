#include "domtree/analysis.hpp"

#include "domtree/error.hpp"
#include "domtree/kernels.hpp"

namespace domtree {

SequenceReport analyze_sequence(const DomPoly& p) {
  SequenceReport rep;
  const auto& d = p.coeffs;
  const int n = p.n;
  const int start = p.support_start();

  mpz_class best = 0;
  for (const auto& c : d)
    if (c > best) best = c;
  for (int i = 0; i <= n; ++i)
    if (d[i] == best) rep.mode_indices.push_back(i);

  rep.unimodal = true;
  {
    int i = start;
    while (i < n && d[i] <= d[i + 1]) ++i;
    for (int j = i; j < n; ++j)
      if (d[j] < d[j + 1]) {
        rep.unimodal = false;
        break;
      }
    rep.increasing_prefix_end = i;
  }
  {
    int j = n;
    while (j > 0 && d[j - 1] >= d[j]) --j;
    rep.decreasing_suffix_start = j;
  }

  rep.log_concave = true;
  for (int i = 1; i < n; ++i) {
    if (d[i] * d[i] < d[i - 1] * d[i + 1]) {
      rep.log_concave = false;
      rep.first_lc_violation = i;
      break;
    }
  }
  return rep;
}

int increasing_chain_end(int n, int gamma) { return (n + 2 * gamma + 1) / 3; }

int decreasing_chain_start(int n, int big_gamma) {
  return (n + 2 * big_gamma - 2 + 2) / 3;  // ceil((n + 2*Gamma - 2)/3)
}

SegmentCheck verify_increasing_segment(const Tree& t, const DomPoly& p) {
  const int gamma = p.support_start();
  SegmentCheck chk;
  chk.chain_from = gamma;
  chk.chain_to = increasing_chain_end(t.n, gamma);
  chk.holds = true;
  for (int i = gamma + 1; i <= chk.chain_to && i <= t.n; ++i)
    if (p[i - 1] > p[i]) {
      chk.holds = false;
      break;
    }
  return chk;
}

SegmentCheck verify_decreasing_segment(const Tree& t, const DomPoly& p,
                                       int guard) {
  const int big_gamma = upper_domination_number(t, guard);
  SegmentCheck chk;
  chk.chain_from = decreasing_chain_start(t.n, big_gamma);
  chk.chain_to = t.n;
  chk.holds = true;
  for (int i = std::max(chk.chain_from, 0) + 1; i <= t.n; ++i)
    if (p[i - 1] < p[i]) {
      chk.holds = false;
      break;
    }
  return chk;
}

GapCheck verify_unimodal_gap(const Tree& t, const DomPoly& p, int guard) {
  GapCheck chk;
  chk.gamma = p.support_start();
  chk.big_gamma = upper_domination_number(t, guard);
  chk.applicable = chk.big_gamma - chk.gamma < 3;
  chk.holds = chk.applicable ? analyze_sequence(p).unimodal : true;
  return chk;
}

AvdReport avd_report(const Tree& t, const DomPoly& p, int guard) {
  AvdReport rep;
  mpz_class weighted = 0, total = 0;
  for (int i = 0; i <= p.n; ++i) {
    weighted += mpz_class(i) * p[i];
    total += p[i];
  }
  rep.avd = mpq_class(weighted, total);
  rep.avd.canonicalize();

  const int gamma = p.support_start();
  const int big_gamma = upper_domination_number(t, guard);
  rep.lower_bound = mpq_class(t.n + 2 * gamma, 3);
  rep.lower_bound.canonicalize();
  rep.upper_bound = mpq_class(t.n + 2 * big_gamma, 3);
  rep.upper_bound.canonicalize();
  rep.within_bounds = rep.lower_bound <= rep.avd && rep.avd <= rep.upper_bound;
  return rep;
}

mpq_class avd_via_critical(const Tree& t, int guard) {
  kernels::require_enumerable(t, guard);
  auto scan = kernels::scan_subsets_omp(t);
  mpz_class critical_total = 0, sets = 0;
  for (int i = 0; i <= t.n; ++i) {
    critical_total += mpz_class(scan.critical_sum[i]);
    sets += mpz_class(scan.dominating[i]);
  }
  mpq_class avd = mpq_class(t.n, 2) + mpq_class(critical_total, 2 * sets);
  avd.canonicalize();
  return avd;
}

TkCertificate verify_tk_certificate(int k) {
  auto labeled = build_t_k(k);
  const DomPoly p = dom_poly_dp(labeled.tree);

  TkCertificate cert;
  cert.k = k;
  cert.n = labeled.tree.n;
  cert.gamma = 3 * k + 1;
  cert.gamma_matches = (p.support_start() == cert.gamma);
  cert.d_gamma = p[cert.gamma];
  cert.d_gamma_plus_1 = p[cert.gamma + 1];
  cert.d_gamma_plus_2 = p[cert.gamma + 2];

  mpz_class two_k, two_2k, two_3k;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
  mpz_ui_pow_ui(two_2k.get_mpz_t(), 2, 2 * k);
  mpz_ui_pow_ui(two_3k.get_mpz_t(), 2, 3 * k);
  cert.expected_d_gamma_plus_1 = 9 * k + 3 * two_k;
  cert.lower_bound_d_gamma_plus_2 =
      3 * (5 * k + k * k) * two_k + 3 * (k + 1) * two_2k + two_3k;

  cert.unique_minimum = (cert.d_gamma == 1);
  cert.plus_1_matches = (cert.d_gamma_plus_1 == cert.expected_d_gamma_plus_1);
  cert.plus_2_at_least_bound =
      (cert.d_gamma_plus_2 >= cert.lower_bound_d_gamma_plus_2);
  cert.product_exceeds_square =
      (cert.d_gamma * cert.d_gamma_plus_2 >
       cert.d_gamma_plus_1 * cert.d_gamma_plus_1);
  cert.violation_required = (k >= 4);
  cert.first_lc_violation = analyze_sequence(p).first_lc_violation;
  return cert;
}

}  // namespace domtree
