#ifndef DOMTREE_KERNELS_HPP
#define DOMTREE_KERNELS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "domtree/tree.hpp"

// Bitmask subset-scan kernels behind the enumeration-based operations. Each
// kernel has a serial reference and an OpenMP variant; the pair must agree
// exactly (asserted by the test suite, timed by the bench target). The
// parallel variants chunk the mask space and merge per-thread tallies, so
// results are identical for any thread count.
namespace domtree::kernels {

inline constexpr int kDefaultGuard = 25;
inline constexpr int kMaskLimit = 62;  // masks and tallies stay in uint64

// Closed-neighborhood masks N[v]; requires n <= kMaskLimit.
std::vector<std::uint64_t> closed_neighborhood_masks(const Tree& t);

void require_n_enumerable(int n, int guard);
void require_enumerable(const Tree& t, int guard);

// Per-cardinality tallies over every dominating set.
struct SubsetScan {
  std::vector<std::uint64_t> dominating;    // # dominating sets of size i
  std::vector<std::uint64_t> critical_sum;  // sum of |a(S)| over those sets
  std::vector<std::uint64_t> minimal;       // # minimal dominating sets
};

SubsetScan scan_subsets_serial(const Tree& t);
SubsetScan scan_subsets_omp(const Tree& t);

// Domination counts only (no per-set critical work); the cheap kernel behind
// the brute-force polynomial.
std::vector<std::uint64_t> count_dominating_serial(const Tree& t);
std::vector<std::uint64_t> count_dominating_omp(const Tree& t);

// Serial streaming visit in ascending mask order. Stops early if fn returns
// false. size < 0 means all cardinalities.
void for_each_dominating_mask(const Tree& t, int size,
                              const std::function<bool(std::uint64_t)>& fn);

// Parallel collect, ascending mask order after merge.
std::vector<std::uint64_t> collect_dominating_masks(const Tree& t, int size);

// Critical vertices of a dominating mask: bit v set iff removing v from s
// breaks domination.
std::uint64_t critical_mask(const std::vector<std::uint64_t>& nbhd,
                            std::uint64_t s);

inline bool mask_dominates(const std::vector<std::uint64_t>& nbhd,
                           std::uint64_t full, std::uint64_t s) {
  std::uint64_t covered = 0;
  std::uint64_t bits = s;
  while (bits) {
    covered |= nbhd[__builtin_ctzll(bits)];
    if (covered == full) return true;
    bits &= bits - 1;
  }
  return covered == full;
}

}  // namespace domtree::kernels

#endif
