#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "hyperwave/grid.hpp"
#include "hyperwave/propagators.hpp"
#include "hyperwave/rng.hpp"

namespace hyperwave::datasets {

// Odd-symmetrized Gaussian: v(r) = A [exp(-((r-c)/w)^2) - exp(-((r+c)/w)^2)].
inline RadialProfile gaussian_profile(const RadialGrid& g, double amplitude = 1.0,
                                      double center = 5.0, double width = 1.0) {
  RadialProfile f(g);
  for (std::size_t j = 0; j < g.N; ++j) {
    const double r = g.r(j);
    const double a = (r - center) / width, b = (r + center) / width;
    f.v[j] = amplitude * (std::exp(-a * a) - std::exp(-b * b));
  }
  return f;
}

// Compactly supported C^4 bump: v(r) = A (1 - x^2)^5 on |x| < 1, x = (r-c)/w.
inline RadialProfile bump_profile(const RadialGrid& g, double amplitude = 1.0,
                                  double center = 5.0, double width = 2.0) {
  if (center - width <= 0.0)
    throw std::invalid_argument("bump_profile: support must avoid r = 0");
  RadialProfile f(g);
  for (std::size_t j = 0; j < g.N; ++j) {
    const double x = (g.r(j) - center) / width;
    if (std::abs(x) < 1.0) {
      const double y = 1.0 - x * x;
      f.v[j] = amplitude * y * y * y * y * y;
    }
  }
  return f;
}

inline propagators::WaveState named_state(const std::string& name, const RadialGrid& g,
                                          double amplitude = 1.0) {
  if (name == "gaussian") {
    return {gaussian_profile(g, amplitude, 5.0, 1.0),
            gaussian_profile(g, 0.5 * amplitude, 4.0, 1.2)};
  }
  if (name == "bump") {
    return {bump_profile(g, amplitude, 5.0, 2.0), bump_profile(g, 0.5 * amplitude, 4.5, 1.5)};
  }
  throw std::invalid_argument("unknown data set '" + name + "' (want gaussian|bump)");
}

// Reproducible family of smooth compactly supported states; counters index
// members so draws are order-independent.
inline propagators::WaveState random_state(const CounterRng& rng, std::uint64_t member,
                                           const RadialGrid& g) {
  const std::uint64_t base = member * 16;
  auto bump_sum = [&](std::uint64_t off) {
    RadialProfile f(g);
    const int terms = 2 + static_cast<int>(rng.uniform(base + off) * 2.0);
    for (int t = 0; t < terms; ++t) {
      const double A = rng.uniform(base + off + 2 * t + 1, 0.4, 1.6) *
                       (rng.uniform(base + off + 2 * t + 7) < 0.5 ? -1.0 : 1.0);
      const double c = rng.uniform(base + off + 2 * t + 2, 3.0, 6.5);
      const double w = rng.uniform(base + off + 2 * t + 3, 0.7, 1.4);
      const auto g1 = gaussian_profile(g, A, c, w);
      for (std::size_t j = 0; j < g.N; ++j) f.v[j] += g1.v[j];
    }
    return f;
  };
  return {bump_sum(0), bump_sum(8)};
}

}  // namespace hyperwave::datasets
