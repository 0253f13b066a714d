#ifndef DOMTREE_RNG_HPP
#define DOMTREE_RNG_HPP

#include <cstdint>
#include <random>

namespace domtree {

// All randomized paths draw from std::mt19937_64 (output sequence is fixed by
// the standard) with rejection-sampled bounding, so a seed reproduces the same
// values on every platform. std::uniform_int_distribution is avoided: its
// output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % bound;
  }

  int range(int lo, int hi) {  // inclusive
    return lo + (int)below((std::uint64_t)(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace domtree

#endif
