// Timing comparison of the serial reference kernels against their OpenMP
// counterparts, plus the exhaustive DP-vs-brute sweep that dominates the
// verification workload.
//
//   bench_kernels [n_counting] [n_scan] [exhaustive_n]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "domtree/domination.hpp"
#include "domtree/kernels.hpp"
#include "domtree/tree.hpp"
#include "domtree/verify.hpp"

using namespace domtree;

namespace {

double time_ms(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-34s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  const int n_count = argc > 1 ? std::atoi(argv[1]) : 22;
  const int n_scan = argc > 2 ? std::atoi(argv[2]) : 20;
  const int n_exhaustive = argc > 3 ? std::atoi(argv[3]) : 7;

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif
  std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    Tree t = random_tree(n_count, 1);
    std::vector<std::uint64_t> a, b;
    double s = time_ms([&] { a = kernels::count_dominating_serial(t); });
    double p = time_ms([&] { b = kernels::count_dominating_omp(t); });
    if (a != b) {
      std::fprintf(stderr, "count kernels disagree\n");
      return 1;
    }
    report(("count_dominating n=" + std::to_string(n_count)).c_str(), s, p);
  }

  {
    Tree t = random_tree(n_scan, 1);
    kernels::SubsetScan a, b;
    double s = time_ms([&] { a = kernels::scan_subsets_serial(t); });
    double p = time_ms([&] { b = kernels::scan_subsets_omp(t); });
    if (a.dominating != b.dominating || a.critical_sum != b.critical_sum ||
        a.minimal != b.minimal) {
      std::fprintf(stderr, "scan kernels disagree\n");
      return 1;
    }
    report(("scan_subsets n=" + std::to_string(n_scan)).c_str(), s, p);
  }

  {
    // Whole-corpus sweep: DP vs brute force on every labeled tree.
    auto sweep_serial = [&] {
      for (int n = 1; n <= n_exhaustive; ++n) {
        const auto total = verify::labeled_tree_count(n);
        for (std::uint64_t i = 0; i < total; ++i) {
          Tree t = verify::labeled_tree_at(n, i);
          if (!(dom_poly_dp(t) == dom_poly_bruteforce(t))) std::abort();
        }
      }
    };
    auto sweep_parallel = [&] {
      for (int n = 1; n <= n_exhaustive; ++n) {
        const auto total = (std::int64_t)verify::labeled_tree_count(n);
#pragma omp parallel for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < total; ++i) {
          Tree t = verify::labeled_tree_at(n, (std::uint64_t)i);
          if (!(dom_poly_dp(t) == dom_poly_bruteforce(t))) std::abort();
        }
      }
    };
    double s = time_ms(sweep_serial);
    double p = time_ms(sweep_parallel);
    report(("dp_vs_brute exhaustive n<=" + std::to_string(n_exhaustive)).c_str(),
           s, p);
  }
  return 0;
}
