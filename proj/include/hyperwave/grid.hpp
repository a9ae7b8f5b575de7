#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hyperwave {

// Uniform radial grid on [0, R] with N interior nodes r_j = j*dr, j = 1..N,
// dr = R/(N+1). The endpoints r = 0 and r = R are implicit Dirichlet nodes:
// every sampled field is odd about r = 0 and vanishes at r = R. The matching
// spectral ladder is lambda_k = k*pi/R, k = 1..N.
struct RadialGrid {
  double R = 40.0;
  std::size_t N = 1 << 14;

  double dr() const { return R / static_cast<double>(N + 1); }
  // radius of interior node with storage index j (0-based)
  double r(std::size_t j) const { return static_cast<double>(j + 1) * dr(); }
  // spectral node with storage index k (0-based)
  double lambda(std::size_t k) const {
    return static_cast<double>(k + 1) * std::numbers::pi / R;
  }
  double lambda_max() const { return lambda(N - 1); }

  bool operator==(const RadialGrid& o) const { return R == o.R && N == o.N; }
  bool operator!=(const RadialGrid& o) const { return !(*this == o); }
};

inline RadialGrid default_grid() { return RadialGrid{40.0, std::size_t{1} << 14}; }
inline RadialGrid refinement_grid() { return RadialGrid{40.0, std::size_t{1} << 13}; }

// Samples of an odd radial function at the interior nodes. For fields on H^3
// the stored values are v(r) = sinh(r) * u(r); the underlying u is recovered
// by unconjugate(). Scalar is double or std::complex<double>.
template <class Scalar>
struct RadialField {
  RadialGrid grid;
  std::vector<Scalar> v;

  RadialField() = default;
  explicit RadialField(const RadialGrid& g) : grid(g), v(g.N, Scalar{}) {}
  RadialField(const RadialGrid& g, std::vector<Scalar> values)
      : grid(g), v(std::move(values)) {
    if (v.size() != grid.N) throw std::invalid_argument("RadialField: sample count != N");
  }

  std::size_t size() const { return v.size(); }
};

using RadialProfile = RadialField<double>;
using ComplexProfile = RadialField<std::complex<double>>;

inline void require_same_grid(const RadialGrid& a, const RadialGrid& b) {
  if (a != b) throw std::invalid_argument("grid mismatch");
}

template <class Scalar>
RadialField<Scalar> operator+(const RadialField<Scalar>& a, const RadialField<Scalar>& b) {
  require_same_grid(a.grid, b.grid);
  RadialField<Scalar> out(a.grid);
  for (std::size_t j = 0; j < a.v.size(); ++j) out.v[j] = a.v[j] + b.v[j];
  return out;
}

template <class Scalar>
RadialField<Scalar> operator-(const RadialField<Scalar>& a, const RadialField<Scalar>& b) {
  require_same_grid(a.grid, b.grid);
  RadialField<Scalar> out(a.grid);
  for (std::size_t j = 0; j < a.v.size(); ++j) out.v[j] = a.v[j] - b.v[j];
  return out;
}

template <class Scalar, class C>
RadialField<Scalar> operator*(C c, const RadialField<Scalar>& a) {
  RadialField<Scalar> out(a.grid);
  for (std::size_t j = 0; j < a.v.size(); ++j) out.v[j] = c * a.v[j];
  return out;
}

template <class Scalar>
double max_abs(const RadialField<Scalar>& f) {
  double m = 0.0;
  for (const auto& x : f.v) m = std::max(m, std::abs(x));
  return m;
}

// Effective support radius: largest node radius where |v| exceeds
// tol * max|v|. Returns 0 for the zero field.
template <class Scalar>
double support_radius(const RadialField<Scalar>& f, double tol = 1e-14) {
  const double cap = tol * max_abs(f);
  if (cap == 0.0) return 0.0;
  for (std::size_t j = f.v.size(); j-- > 0;) {
    if (std::abs(f.v[j]) > cap) return f.grid.r(j);
  }
  return 0.0;
}

}  // namespace hyperwave
