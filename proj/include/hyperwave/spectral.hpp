#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperwave/grid.hpp"
#include "hyperwave/quadrature.hpp"
#include "hyperwave/transform.hpp"

namespace hyperwave::spectral {

// v_j = sinh(r_j) * u_j
template <class Scalar>
RadialField<Scalar> conjugate(const std::vector<Scalar>& u_samples, const RadialGrid& grid) {
  if (u_samples.size() != grid.N)
    throw std::invalid_argument("conjugate: sample count != grid.N");
  RadialField<Scalar> out(grid);
  for (std::size_t j = 0; j < grid.N; ++j) out.v[j] = std::sinh(grid.r(j)) * u_samples[j];
  return out;
}

template <class Scalar>
std::vector<Scalar> unconjugate(const RadialField<Scalar>& f) {
  std::vector<Scalar> u(f.grid.N);
  for (std::size_t j = 0; j < f.grid.N; ++j) u[j] = f.v[j] / std::sinh(f.grid.r(j));
  return u;
}

// u(0) = v'(0), via the 4th-order one-sided stencil with the implicit v(0)=0.
template <class Scalar>
Scalar u_at_origin(const RadialField<Scalar>& f) {
  if (f.grid.N < 4) throw std::invalid_argument("u_at_origin: grid too coarse");
  const double h = f.grid.dr();
  return (48.0 * f.v[0] - 36.0 * f.v[1] + 16.0 * f.v[2] - 3.0 * f.v[3]) / (12.0 * h);
}

// Scalar symbol of the spectral parameter lambda of D0 (D0^2 = -Lap - 1 on H^3),
// declared even: m(-lambda) = m(lambda). Removable singularities must be
// supplied in removable form.
struct MultiplierSpec {
  std::string name;
  std::function<std::complex<double>(double)> symbol;
};

inline MultiplierSpec multiplier_identity() {
  return {"identity", [](double) { return std::complex<double>(1.0, 0.0); }};
}
// D0 and D = sqrt(-Lap) = sqrt(D0^2 + 1)
inline MultiplierSpec multiplier_d0() {
  return {"D0", [](double l) { return std::complex<double>(l, 0.0); }};
}
inline MultiplierSpec multiplier_d() {
  return {"D", [](double l) { return std::complex<double>(std::sqrt(l * l + 1.0), 0.0); }};
}

namespace detail {
template <class SymbolValue>
std::vector<SymbolValue> symbol_table(const RadialGrid& grid,
                                      const std::function<SymbolValue(double)>& symbol,
                                      const std::string& name) {
  std::vector<SymbolValue> m(grid.N);
  for (std::size_t k = 0; k < grid.N; ++k) {
    m[k] = symbol(grid.lambda(k));
    if (!std::isfinite(std::abs(m[k])))
      throw std::invalid_argument("multiplier '" + name + "' not finite on the grid spectrum");
  }
  return m;
}
}  // namespace detail

// m(D0) applied through the sine basis; complex-valued symbols promote the
// output to a complex profile.
template <class Scalar>
ComplexProfile apply_multiplier(const RadialField<Scalar>& f, const MultiplierSpec& m) {
  const auto table = detail::symbol_table<std::complex<double>>(f.grid, m.symbol, m.name);
  auto coeffs = sine_coefficients(f);
  SpectralCoeffs<std::complex<double>> out{f.grid, std::vector<std::complex<double>>(f.grid.N)};
  for (std::size_t k = 0; k < f.grid.N; ++k) out.b[k] = table[k] * coeffs.b[k];
  return sine_synthesis(out);
}

// Real-symbol fast path, stays in the real representation.
inline RadialProfile apply_real_multiplier(const RadialProfile& f,
                                           const std::function<double(double)>& symbol,
                                           const std::string& name = "real multiplier") {
  const auto table = detail::symbol_table<double>(f.grid, symbol, name);
  auto coeffs = sine_coefficients(f);
  for (std::size_t k = 0; k < f.grid.N; ++k) coeffs.b[k] *= table[k];
  return sine_synthesis(coeffs);
}

// D^s = (D0^2 + 1)^{s/2} = (-Lap)^{s/2}
inline RadialProfile apply_fractional_D(const RadialProfile& f, double s) {
  return apply_real_multiplier(
      f, [s](double l) { return std::pow(l * l + 1.0, s / 2.0); }, "D^s");
}

// Fraction of coefficient energy in the top band of the spectrum; a proxy for
// unresolved spectral tail past lambda_max.
template <class Scalar>
double spectral_tail_fraction(const RadialField<Scalar>& f, double band = 0.1) {
  auto coeffs = sine_coefficients(f);
  double total = 0.0, tail = 0.0;
  const std::size_t cut = static_cast<std::size_t>((1.0 - band) * f.grid.N);
  for (std::size_t k = 0; k < f.grid.N; ++k) {
    const double e = std::norm(coeffs.b[k]);
    total += e;
    if (k >= cut) tail += e;
  }
  return total > 0.0 ? tail / total : 0.0;
}

// Hyperbolic L^q norm of u on H^3:
//   ||u||_q^q = 4 pi * int_0^inf |u|^q sinh^2(r) dr = 4 pi * int |v|^q sinh^{2-q}(r) dr.
// Composite Simpson over the grid nodes including the implicit endpoints.
template <class Scalar>
double lq_norm(const RadialField<Scalar>& f, double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("lq_norm: q must be >= 1");
  const std::size_t n = f.grid.N;
  std::vector<double> integrand(n + 2, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double r = f.grid.r(j);
    const double av = std::abs(f.v[j]);
    integrand[j + 1] = av > 0.0 ? std::pow(av, q) * std::pow(std::sinh(r), 2.0 - q) : 0.0;
  }
  const double val = simpson(integrand, f.grid.dr());
  return std::pow(4.0 * std::numbers::pi * val, 1.0 / q);
}

// sup over H^3 of |u| = |v|/sinh r, including the recovered origin value.
template <class Scalar>
double linf_norm_u(const RadialField<Scalar>& f) {
  double m = std::abs(u_at_origin(f));
  for (std::size_t j = 0; j < f.grid.N; ++j)
    m = std::max(m, std::abs(f.v[j]) / std::sinh(f.grid.r(j)));
  return m;
}

// L^2(H^3) inner product via Parseval: <f, g> = 4 pi (R/2) sum b^f_k conj(b^g_k).
inline double l2_inner(const RadialProfile& f, const RadialProfile& g) {
  require_same_grid(f.grid, g.grid);
  auto bf = sine_coefficients(f);
  auto bg = sine_coefficients(g);
  double acc = 0.0;
  for (std::size_t k = 0; k < f.grid.N; ++k) acc += bf.b[k] * bg.b[k];
  return 4.0 * std::numbers::pi * (f.grid.R / 2.0) * acc;
}

// Radial kernel of m(D0):  K(r) = -1/(4 pi^2 sinh r) d/dtau mhat(tau)|_{tau=r}.
// For even m, d/dtau mhat(tau) = -2 int_0^inf lambda m(lambda) sin(tau lambda) dlambda,
// discretized on the grid ladder (a sine transform of lambda_k m(lambda_k)).
// Symbols whose transform the ladder cannot resolve are flagged; a closed-form
// mhat' can be supplied instead (e.g. identity: mhat = 2 pi delta, K = 0 off 0).
struct KernelResult {
  std::vector<double> r;
  std::vector<std::complex<double>> K;
  bool grid_resolved = true;
};

inline KernelResult kernel_of_multiplier(
    const MultiplierSpec& m, const std::vector<double>& r_points, const RadialGrid& grid,
    const std::optional<std::function<std::complex<double>(double)>>& mhat_prime = std::nullopt) {
  KernelResult out;
  out.r = r_points;
  out.K.resize(r_points.size());
  if (mhat_prime) {
    for (std::size_t i = 0; i < r_points.size(); ++i) {
      const double r = r_points[i];
      if (r <= 0.0) throw std::invalid_argument("kernel_of_multiplier: r must be > 0");
      out.K[i] = -(*mhat_prime)(r) / (4.0 * std::numbers::pi * std::numbers::pi * std::sinh(r));
    }
    return out;
  }
  const auto table = detail::symbol_table<std::complex<double>>(grid, m.symbol, m.name);
  const double dl = std::numbers::pi / grid.R;
  // resolution check: |lambda m(lambda)| must have decayed at the band edge
  double peak = 0.0;
  for (std::size_t k = 0; k < grid.N; ++k)
    peak = std::max(peak, std::abs(table[k]) * grid.lambda(k));
  const double edge = std::abs(table[grid.N - 1]) * grid.lambda_max();
  out.grid_resolved = peak == 0.0 || edge <= 1e-12 * peak;

  std::vector<double> re(grid.N), im(grid.N), tre(grid.N), tim(grid.N);
  for (std::size_t k = 0; k < grid.N; ++k) {
    re[k] = grid.lambda(k) * table[k].real();
    im[k] = grid.lambda(k) * table[k].imag();
  }
  const auto& plan = sine_transform(grid.N);
  plan.raw(re.data(), tre.data());  // 2 sum_k a_k sin(pi (j+1)(k+1)/(N+1))
  plan.raw(im.data(), tim.data());
  // tre[j]/2 * dl approximates int_0^inf lambda m sin(r_j lambda) dlambda; kernel
  // values are evaluated at the nearest grid node, reported in out.r.
  for (std::size_t i = 0; i < r_points.size(); ++i) {
    const double r = r_points[i];
    if (r <= 0.0) throw std::invalid_argument("kernel_of_multiplier: r must be > 0");
    const auto j = static_cast<std::size_t>(std::lround(r / grid.dr()));
    if (j < 1 || j > grid.N)
      throw std::invalid_argument("kernel_of_multiplier: r outside grid");
    out.r[i] = grid.r(j - 1);
    const std::complex<double> integral(0.5 * dl * tre[j - 1], 0.5 * dl * tim[j - 1]);
    out.K[i] = 2.0 * integral /
               (4.0 * std::numbers::pi * std::numbers::pi * std::sinh(out.r[i]));
  }
  return out;
}

}  // namespace hyperwave::spectral
