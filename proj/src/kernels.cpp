#include "domtree/kernels.hpp"

#include <string>

#include "domtree/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace domtree::kernels {

std::vector<std::uint64_t> closed_neighborhood_masks(const Tree& t) {
  if (t.n > kMaskLimit)
    throw Error(ErrorKind::GuardExceeded,
                "bitmask engine handles n <= " + std::to_string(kMaskLimit) +
                    ", got n = " + std::to_string(t.n));
  std::vector<std::uint64_t> nbhd(t.n);
  for (int v = 0; v < t.n; ++v) {
    std::uint64_t m = std::uint64_t{1} << v;
    for (int w : t.adj[v]) m |= std::uint64_t{1} << w;
    nbhd[v] = m;
  }
  return nbhd;
}

void require_n_enumerable(int n, int guard) {
  if (n > guard)
    throw Error(ErrorKind::GuardExceeded,
                "n = " + std::to_string(n) + " exceeds enumeration guard " +
                    std::to_string(guard) + " (raise with --guard)");
  if (n > kMaskLimit)
    throw Error(ErrorKind::GuardExceeded,
                "enumeration supports n <= " + std::to_string(kMaskLimit));
}

void require_enumerable(const Tree& t, int guard) {
  require_n_enumerable(t.n, guard);
}

std::uint64_t critical_mask(const std::vector<std::uint64_t>& nbhd,
                            std::uint64_t s) {
  // v in S is critical exactly when some u in N[v] has N[u] & S == {v}.
  std::uint64_t crit = 0;
  for (size_t u = 0; u < nbhd.size(); ++u) {
    std::uint64_t dominators = nbhd[u] & s;
    if (__builtin_popcountll(dominators) == 1) crit |= dominators;
  }
  return crit;
}

namespace {

void scan_range(const std::vector<std::uint64_t>& nbhd, std::uint64_t full,
                std::uint64_t begin, std::uint64_t end, SubsetScan& acc) {
  for (std::uint64_t s = begin; s < end; ++s) {
    if (!mask_dominates(nbhd, full, s)) continue;
    int size = __builtin_popcountll(s);
    std::uint64_t crit = critical_mask(nbhd, s);
    acc.dominating[size] += 1;
    acc.critical_sum[size] += (std::uint64_t)__builtin_popcountll(crit);
    if (crit == s) acc.minimal[size] += 1;
  }
}

void count_range(const std::vector<std::uint64_t>& nbhd, std::uint64_t full,
                 std::uint64_t begin, std::uint64_t end,
                 std::vector<std::uint64_t>& counts) {
  for (std::uint64_t s = begin; s < end; ++s)
    if (mask_dominates(nbhd, full, s))
      counts[__builtin_popcountll(s)] += 1;
}

}  // namespace

SubsetScan scan_subsets_serial(const Tree& t) {
  auto nbhd = closed_neighborhood_masks(t);
  std::uint64_t full = (std::uint64_t{1} << t.n) - 1;
  SubsetScan acc;
  acc.dominating.assign(t.n + 1, 0);
  acc.critical_sum.assign(t.n + 1, 0);
  acc.minimal.assign(t.n + 1, 0);
  scan_range(nbhd, full, 0, std::uint64_t{1} << t.n, acc);
  return acc;
}

SubsetScan scan_subsets_omp(const Tree& t) {
  auto nbhd = closed_neighborhood_masks(t);
  std::uint64_t full = (std::uint64_t{1} << t.n) - 1;
  const std::int64_t total = std::int64_t{1} << t.n;

  SubsetScan acc;
  acc.dominating.assign(t.n + 1, 0);
  acc.critical_sum.assign(t.n + 1, 0);
  acc.minimal.assign(t.n + 1, 0);

  const std::int64_t chunk = 1 << 16;
  const std::int64_t chunks = (total + chunk - 1) / chunk;
#pragma omp parallel
  {
    SubsetScan local;
    local.dominating.assign(t.n + 1, 0);
    local.critical_sum.assign(t.n + 1, 0);
    local.minimal.assign(t.n + 1, 0);
#pragma omp for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) {
      std::uint64_t begin = (std::uint64_t)c * chunk;
      std::uint64_t end = std::min<std::uint64_t>(begin + chunk, total);
      scan_range(nbhd, full, begin, end, local);
    }
#pragma omp critical
    for (int i = 0; i <= t.n; ++i) {
      acc.dominating[i] += local.dominating[i];
      acc.critical_sum[i] += local.critical_sum[i];
      acc.minimal[i] += local.minimal[i];
    }
  }
  return acc;
}

std::vector<std::uint64_t> count_dominating_serial(const Tree& t) {
  auto nbhd = closed_neighborhood_masks(t);
  std::uint64_t full = (std::uint64_t{1} << t.n) - 1;
  std::vector<std::uint64_t> counts(t.n + 1, 0);
  count_range(nbhd, full, 0, std::uint64_t{1} << t.n, counts);
  return counts;
}

std::vector<std::uint64_t> count_dominating_omp(const Tree& t) {
  auto nbhd = closed_neighborhood_masks(t);
  std::uint64_t full = (std::uint64_t{1} << t.n) - 1;
  const std::int64_t total = std::int64_t{1} << t.n;
  std::vector<std::uint64_t> counts(t.n + 1, 0);

  const std::int64_t chunk = 1 << 16;
  const std::int64_t chunks = (total + chunk - 1) / chunk;
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(t.n + 1, 0);
#pragma omp for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) {
      std::uint64_t begin = (std::uint64_t)c * chunk;
      std::uint64_t end = std::min<std::uint64_t>(begin + chunk, total);
      count_range(nbhd, full, begin, end, local);
    }
#pragma omp critical
    for (int i = 0; i <= t.n; ++i) counts[i] += local[i];
  }
  return counts;
}

void for_each_dominating_mask(const Tree& t, int size,
                              const std::function<bool(std::uint64_t)>& fn) {
  auto nbhd = closed_neighborhood_masks(t);
  std::uint64_t full = (std::uint64_t{1} << t.n) - 1;
  const std::uint64_t total = std::uint64_t{1} << t.n;
  for (std::uint64_t s = 0; s < total; ++s) {
    if (size >= 0 && __builtin_popcountll(s) != size) continue;
    if (!mask_dominates(nbhd, full, s)) continue;
    if (!fn(s)) return;
  }
}

std::vector<std::uint64_t> collect_dominating_masks(const Tree& t, int size) {
  auto nbhd = closed_neighborhood_masks(t);
  std::uint64_t full = (std::uint64_t{1} << t.n) - 1;
  const std::int64_t total = std::int64_t{1} << t.n;
  const std::int64_t chunk = 1 << 16;
  const std::int64_t chunks = (total + chunk - 1) / chunk;

  std::vector<std::vector<std::uint64_t>> buckets(chunks);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < chunks; ++c) {
    std::uint64_t begin = (std::uint64_t)c * chunk;
    std::uint64_t end = std::min<std::uint64_t>(begin + chunk, total);
    for (std::uint64_t s = begin; s < end; ++s) {
      if (size >= 0 && __builtin_popcountll(s) != size) continue;
      if (mask_dominates(nbhd, full, s)) buckets[c].push_back(s);
    }
  }
  // Chunks abut in mask order, so concatenation keeps ascending order.
  std::vector<std::uint64_t> out;
  for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace domtree::kernels
