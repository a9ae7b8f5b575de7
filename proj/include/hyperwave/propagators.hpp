#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hyperwave/grid.hpp"
#include "hyperwave/quadrature.hpp"
#include "hyperwave/report.hpp"
#include "hyperwave/spectral.hpp"
#include "hyperwave/transform.hpp"

namespace hyperwave::propagators {

// Evolution unknown for the shifted wave on H^3 (radial): the conjugated
// field v = sinh(r) u and its time derivative on one shared grid.
struct WaveState {
  RadialProfile v;
  RadialProfile vt;
  double time = 0.0;

  explicit WaveState(const RadialGrid& g) : v(g), vt(g) {}
  WaveState(RadialProfile v0, RadialProfile v1, double t = 0.0)
      : v(std::move(v0)), vt(std::move(v1)), time(t) {
    require_same_grid(v.grid, vt.grid);
  }
  const RadialGrid& grid() const { return v.grid; }
};

inline void require_support_margin(const WaveState& s, double t) {
  const double reach =
      std::max(support_radius(s.v), support_radius(s.vt)) + t;
  if (reach >= s.grid().R)
    throw std::invalid_argument("support margin violated: data reaches r=R within horizon");
}

// Decay weight K_q(tau) = (1+tau)^{2/q} / (sinh tau)^{(n-1)(1/2-1/q)}.
inline double kq_weight(int n, double q, double tau) {
  return std::pow(1.0 + tau, 2.0 / q) /
         std::pow(std::sinh(tau), (n - 1.0) * (0.5 - 1.0 / q));
}
// Companion weight for C(tau), without the (1+tau)^{2/q} factor.
inline double kq_weight_cos(int n, double q, double tau) {
  return 1.0 / std::pow(std::sinh(tau), (n - 1.0) * (0.5 - 1.0 / q));
}

// --- exact spectral propagation -------------------------------------------
//
// In the sine basis the shifted wave is a family of oscillators
// b_k'' = -lambda_k^2 b_k, solved by the S/C multipliers
// S(t) = sin(t lambda)/lambda, C(t) = cos(t lambda).

inline WaveState spectral_propagate(const WaveState& s, double t) {
  if (t < 0.0) throw std::invalid_argument("spectral_propagate: t must be >= 0");
  require_support_margin(s, t);
  auto b0 = sine_coefficients(s.v);
  auto b1 = sine_coefficients(s.vt);
  SpectralCoeffs<double> nb0{s.grid(), std::vector<double>(s.grid().N)};
  SpectralCoeffs<double> nb1{s.grid(), std::vector<double>(s.grid().N)};
  for (std::size_t k = 0; k < s.grid().N; ++k) {
    const double l = s.grid().lambda(k);
    const double c = std::cos(t * l), sn = std::sin(t * l);
    nb0.b[k] = c * b0.b[k] + (sn / l) * b1.b[k];
    nb1.b[k] = -l * sn * b0.b[k] + c * b1.b[k];
  }
  WaveState out(s.grid());
  out.v = sine_synthesis(nb0);
  out.vt = sine_synthesis(nb1);
  out.time = s.time + t;
  return out;
}

// S(t) applied to a single profile (solution with v0 = 0, vt0 = f).
inline RadialProfile apply_sine_propagator(const RadialProfile& f, double t) {
  return spectral::apply_real_multiplier(
      f, [t](double l) { return l > 0.0 ? std::sin(t * l) / l : t; }, "S(t)");
}
inline RadialProfile apply_cosine_propagator(const RadialProfile& f, double t) {
  return spectral::apply_real_multiplier(
      f, [t](double l) { return std::cos(t * l); }, "C(t)");
}

// --- exact d'Alembert propagation ------------------------------------------
//
// Under v = sinh(r) u the shifted wave becomes the flat 1-D wave on the odd
// extension, so v(t,r) = (vtilde0(r+t) + vtilde0(r-t))/2 + (W(r+t) - W(r-t))/2
// with W the cumulative integral of vtilde1. The grid's implicit Dirichlet
// node at r = R adds a second odd reflection; folding below matches the sine
// basis exactly. Off-node arguments are linearly interpolated.

namespace detail {

// fold x into [0, 2R) and evaluate the (odd,odd) extension by linear interpolation
inline double sample_odd(const RadialProfile& f, double x) {
  const double R = f.grid.R;
  const double period = 2.0 * R;
  x = std::fmod(x, period);
  if (x < 0.0) x += period;
  double sign = 1.0;
  if (x > R) {
    x = period - x;
    sign = -1.0;
  }
  const double h = f.grid.dr();
  const double pos = x / h;  // node index in 0..N+1 with 0 and N+1 implicit zeros
  auto node = [&](long i) -> double {
    if (i <= 0 || i > static_cast<long>(f.grid.N)) return 0.0;
    return f.v[static_cast<std::size_t>(i - 1)];
  };
  const long i = static_cast<long>(std::floor(pos));
  const double w = pos - static_cast<double>(i);
  return sign * ((1.0 - w) * node(i) + w * node(i + 1));
}

// samples of an (even,even) periodic extension given values at nodes 0..N+1
inline double sample_even(const std::vector<double>& w, const RadialGrid& g, double x) {
  const double R = g.R;
  const double period = 2.0 * R;
  x = std::fmod(x, period);
  if (x < 0.0) x += period;
  if (x > R) x = period - x;
  const double h = g.dr();
  const double pos = x / h;
  const long last = static_cast<long>(g.N) + 1;
  long i = static_cast<long>(std::floor(pos));
  if (i >= last) i = last - 1;
  const double t = pos - static_cast<double>(i);
  return (1.0 - t) * w[static_cast<std::size_t>(i)] + t * w[static_cast<std::size_t>(i + 1)];
}

// node values (including endpoints) of the cumulative integral of the odd field
inline std::vector<double> cumulative_primitive(const RadialProfile& f) {
  std::vector<double> samples(f.grid.N + 2, 0.0);
  for (std::size_t j = 0; j < f.grid.N; ++j) samples[j + 1] = f.v[j];
  return cumulative_simpson(samples, f.grid.dr());
}

// 4th-order centered derivative at the interior nodes plus endpoints, using
// odd ghost values about r=0 and r=R.
inline std::vector<double> derivative_nodes(const RadialProfile& f) {
  const std::size_t n = f.grid.N;
  const double h = f.grid.dr();
  auto node = [&](long i) -> double {
    // odd about 0 and R: v(-x) = -v(x), v(R+y) = -v(R-y)
    const long last = static_cast<long>(n) + 1;
    long idx = i;
    double sign = 1.0;
    if (idx < 0) {
      idx = -idx;
      sign = -sign;
    }
    if (idx > last) {
      idx = 2 * last - idx;
      sign = -sign;
    }
    if (idx <= 0 || idx >= last) return 0.0;
    return sign * f.v[static_cast<std::size_t>(idx - 1)];
  };
  std::vector<double> d(n + 2);
  for (long i = 0; i <= static_cast<long>(n) + 1; ++i) {
    d[static_cast<std::size_t>(i)] =
        (8.0 * (node(i + 1) - node(i - 1)) - (node(i + 2) - node(i - 2))) / (12.0 * h);
  }
  return d;
}

}  // namespace detail

inline WaveState dalembert_propagate(const WaveState& s, double t) {
  if (t < 0.0) throw std::invalid_argument("dalembert_propagate: t must be >= 0");
  require_support_margin(s, t);
  const auto& g = s.grid();
  const auto W = detail::cumulative_primitive(s.vt);    // even-even extension
  const auto dv0 = detail::derivative_nodes(s.v);       // even-even extension
  WaveState out(g);
  for (std::size_t j = 0; j < g.N; ++j) {
    const double r = g.r(j);
    const double vp = detail::sample_odd(s.v, r + t);
    const double vm = detail::sample_odd(s.v, r - t);
    const double Wp = detail::sample_even(W, g, r + t);
    const double Wm = detail::sample_even(W, g, r - t);
    out.v.v[j] = 0.5 * (vp + vm) + 0.5 * (Wp - Wm);
    const double dp = detail::sample_even(dv0, g, r + t);
    const double dm = detail::sample_even(dv0, g, r - t);
    const double up = detail::sample_odd(s.vt, r + t);
    const double um = detail::sample_odd(s.vt, r - t);
    out.vt.v[j] = 0.5 * (dp - dm) + 0.5 * (up + um);
  }
  out.time = s.time + t;
  return out;
}

// flat conserved energy int (vt^2 + vr^2) dr, equal to ||u_t||^2 + ||D0 u||^2
// on H^3 up to the 4 pi volume factor
inline double flat_energy(const WaveState& s) {
  const auto dv = detail::derivative_nodes(s.v);
  const std::size_t n = s.grid().N;
  std::vector<double> integrand(n + 2, 0.0);
  integrand[0] = dv[0] * dv[0];
  integrand[n + 1] = dv[n + 1] * dv[n + 1];
  for (std::size_t j = 0; j < n; ++j)
    integrand[j + 1] = s.vt.v[j] * s.vt.v[j] + dv[j + 1] * dv[j + 1];
  return simpson(integrand, s.grid().dr());
}

// --- Duhamel ----------------------------------------------------------------
//
// u(tau) = int_0^tau S(tau - s) F(s) ds, assembled in coefficient space with
// the angle identity sin((tau-s)l) = sin(tau l)cos(s l) - cos(tau l)sin(s l),
// so the s-integrals become cumulative-Simpson prefixes of the forcing
// coefficients. Returns the state at t_final (v and vt).
inline WaveState duhamel_solve(const std::function<RadialProfile(double)>& forcing,
                               const RadialGrid& grid, double t_final, double dt) {
  if (!(dt > 0.0) || !(t_final >= 0.0))
    throw std::invalid_argument("duhamel_solve: need dt > 0, t_final >= 0");
  const auto steps = static_cast<std::size_t>(std::lround(t_final / dt));
  if (std::abs(steps * dt - t_final) > 1e-9 * std::max(1.0, t_final))
    throw std::invalid_argument("duhamel_solve: t_final must be a multiple of dt");
  const std::size_t n = grid.N;

  std::vector<std::vector<double>> fc(steps + 1);  // cos(s l) * Fhat(s)
  std::vector<std::vector<double>> fs(steps + 1);  // sin(s l) * Fhat(s)
  for (std::size_t i = 0; i <= steps; ++i) {
    const double si = i * dt;
    RadialProfile F = forcing(si);
    require_same_grid(F.grid, grid);
    auto Fhat = sine_coefficients(F);
    fc[i].resize(n);
    fs[i].resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double l = grid.lambda(k);
      fc[i][k] = std::cos(si * l) * Fhat.b[k];
      fs[i][k] = std::sin(si * l) * Fhat.b[k];
    }
  }
  // prefix integrals per mode
  std::vector<double> colc(steps + 1), cols(steps + 1);
  SpectralCoeffs<double> bv{grid, std::vector<double>(n)};
  SpectralCoeffs<double> bvt{grid, std::vector<double>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i <= steps; ++i) {
      colc[i] = fc[i][k];
      cols[i] = fs[i][k];
    }
    const auto A = cumulative_simpson(colc, dt);
    const auto B = cumulative_simpson(cols, dt);
    const double l = grid.lambda(k);
    const double c = std::cos(t_final * l), sn = std::sin(t_final * l);
    bv.b[k] = (sn * A.back() - c * B.back()) / l;
    bvt.b[k] = c * A.back() + sn * B.back();
  }
  WaveState out(grid);
  out.v = sine_synthesis(bv);
  out.vt = sine_synthesis(bvt);
  out.time = t_final;
  return out;
}

// --- verification scans -------------------------------------------------

// e^{tau} sup_x |u(tau, x)| over the tau grid; passes when the maximum is
// finite and the tail half shows no growth trend.
inline VerificationReport free_decay_scan(const WaveState& data,
                                          const std::vector<double>& tau_grid,
                                          double slope_cap = 0.01) {
  VerificationReport rep;
  rep.estimate = "free_decay";
  rep.grid = tau_grid;
  for (double tau : tau_grid) {
    WaveState s = spectral_propagate(data, tau);
    rep.ratios.push_back(std::exp(tau) * spectral::linf_norm_u(s.v));
  }
  rep.sup = 0.0;
  for (double m : rep.ratios) rep.sup = std::max(rep.sup, m);
  // least-squares slope of log M over the tail half
  std::vector<double> xs, ys;
  const double t_half = tau_grid.empty() ? 0.0 : tau_grid.back() / 2.0;
  for (std::size_t i = 0; i < tau_grid.size(); ++i) {
    if (tau_grid[i] >= t_half && rep.ratios[i] > 0.0) {
      xs.push_back(tau_grid[i]);
      ys.push_back(std::log(rep.ratios[i]));
    }
  }
  double slope = 0.0;
  if (xs.size() >= 2) slope = ls_slope(xs, ys);
  rep.aux["tail_slope"] = slope;
  rep.verdict = std::isfinite(rep.sup) && slope <= slope_cap;
  return rep;
}

// ratio(tau) = ||S(tau) f||_q / (K_q(tau) ||D^{s-1} f||_{q'}) with
// s = (n+1)(1/2 - 1/q), n = 3; and the C(tau) companion with exponent s.
struct DispersiveScan {
  VerificationReport sine;
  VerificationReport cosine;
};

inline DispersiveScan dispersive_ratio_scan(const RadialProfile& f, double q,
                                            const std::vector<double>& tau_grid) {
  if (!(q > 2.0)) throw std::invalid_argument("dispersive_ratio_scan: q must be > 2");
  const int n = 3;
  const double s = (n + 1.0) * (0.5 - 1.0 / q);
  const double qp = q / (q - 1.0);
  DispersiveScan out;
  out.sine.estimate = "dispersive_sine";
  out.cosine.estimate = "dispersive_cosine";
  out.sine.grid = out.cosine.grid = tau_grid;
  const double den_s = spectral::lq_norm(spectral::apply_fractional_D(f, s - 1.0), qp);
  const double den_c = spectral::lq_norm(spectral::apply_fractional_D(f, s), qp);
  for (double tau : tau_grid) {
    const double ns = spectral::lq_norm(apply_sine_propagator(f, tau), q);
    const double nc = spectral::lq_norm(apply_cosine_propagator(f, tau), q);
    out.sine.ratios.push_back(ns / (kq_weight(n, q, tau) * den_s));
    out.cosine.ratios.push_back(nc / (kq_weight_cos(n, q, tau) * den_c));
  }
  for (double v : out.sine.ratios) out.sine.sup = std::max(out.sine.sup, v);
  for (double v : out.cosine.ratios) out.cosine.sup = std::max(out.cosine.sup, v);
  out.sine.verdict = std::isfinite(out.sine.sup);
  out.cosine.verdict = std::isfinite(out.cosine.sup);
  return out;
}

}  // namespace hyperwave::propagators
