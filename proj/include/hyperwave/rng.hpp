#pragma once

#include <cstdint>

namespace hyperwave {

// Counter-based generator: every draw is a pure function of (seed, counter),
// so scan cells can be evaluated in any order or in parallel and still
// reproduce bit-identical streams.
struct CounterRng {
  std::uint64_t seed = 0;

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t bits(std::uint64_t counter) const {
    return splitmix64(splitmix64(seed) ^ splitmix64(counter * 0x2545f4914f6cdd1dULL + 1));
  }

  // uniform in [0, 1)
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  double uniform(std::uint64_t counter, double lo, double hi) const {
    return lo + (hi - lo) * uniform(counter);
  }
};

}  // namespace hyperwave
