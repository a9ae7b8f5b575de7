#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hyperwave {

// Composite Simpson over equispaced samples including both endpoints.
// Odd interval counts get a 3/8 closeout on the last three intervals.
template <class Scalar>
Scalar simpson(const std::vector<Scalar>& f, double h) {
  const std::size_t n = f.size();
  if (n < 2) return Scalar{};
  const std::size_t intervals = n - 1;
  if (intervals == 1) return (h / 2.0) * (f[0] + f[1]);
  if (intervals == 2) return (h / 3.0) * (f[0] + 4.0 * f[1] + f[2]);
  std::size_t m = intervals;
  Scalar tail{};
  if (m % 2 != 0) {
    // Simpson 3/8 on the final three intervals
    tail = (3.0 * h / 8.0) * (f[n - 4] + 3.0 * f[n - 3] + 3.0 * f[n - 2] + f[n - 1]);
    m -= 3;
  }
  Scalar acc{};
  if (m > 0) {
    acc = f[0] + f[m];
    for (std::size_t j = 1; j < m; j += 2) acc += 4.0 * f[j];
    for (std::size_t j = 2; j < m; j += 2) acc += 2.0 * f[j];
    acc *= h / 3.0;
  }
  return acc + tail;
}

// Cumulative integral at every sample point, 4th order. Even prefixes use
// Simpson pairs; odd prefixes add the local 5/12, 8/12, -1/12 correction.
template <class Scalar>
std::vector<Scalar> cumulative_simpson(const std::vector<Scalar>& f, double h) {
  const std::size_t n = f.size();
  std::vector<Scalar> out(n, Scalar{});
  if (n < 2) return out;
  if (n == 2) {
    out[1] = (h / 2.0) * (f[0] + f[1]);
    return out;
  }
  for (std::size_t i = 2; i < n; i += 2) {
    out[i] = out[i - 2] + (h / 3.0) * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
  }
  for (std::size_t i = 1; i < n; i += 2) {
    if (i + 1 < n) {
      out[i] = out[i - 1] + (h / 12.0) * (5.0 * f[i - 1] + 8.0 * f[i] - f[i + 1]);
    } else {
      out[i] = out[i - 1] + (h / 12.0) * (-f[i - 2] + 8.0 * f[i - 1] + 5.0 * f[i]);
    }
  }
  return out;
}

namespace detail {
// Gauss-Kronrod 15/7 nodes and weights (QUADPACK dqk15).
inline constexpr std::array<double, 8> gk15_nodes = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr std::array<double, 8> gk15_wk = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr std::array<double, 4> gk15_wg = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};
}  // namespace detail

template <class F>
auto gk15(F&& f, double a, double b, double* err = nullptr) {
  using R = decltype(f(a));
  const double c = 0.5 * (a + b);
  const double hl = 0.5 * (b - a);
  R resk{};
  R resg{};
  for (std::size_t i = 0; i < 8; ++i) {
    const double x = detail::gk15_nodes[i];
    R fv;
    if (i == 7) {
      fv = f(c);
      resk += detail::gk15_wk[7] * fv;
      resg += detail::gk15_wg[3] * fv;
    } else {
      const R f1 = f(c - hl * x);
      const R f2 = f(c + hl * x);
      fv = f1 + f2;
      resk += detail::gk15_wk[i] * fv;
      if (i % 2 == 1) resg += detail::gk15_wg[i / 2] * fv;
    }
  }
  resk *= hl;
  resg *= hl;
  if (err) *err = std::abs(resk - resg);
  return resk;
}

struct QuadratureFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Adaptive GK15 by interval bisection. Tolerances are per-call absolutes
// plus a relative target against the running estimate.
template <class F>
auto adaptive_gk(F&& f, double a, double b, double abs_tol = 1e-12,
                 double rel_tol = 1e-11, int max_depth = 28) {
  using R = decltype(f(a));
  struct Frame {
    double a, b;
    int depth;
  };
  double err0 = 0.0;
  R first = gk15(f, a, b, &err0);
  double scale = std::abs(first);
  std::vector<Frame> stack{{a, b, 0}};
  R total{};
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    double err = 0.0;
    R val = gk15(f, fr.a, fr.b, &err);
    if (err <= abs_tol + rel_tol * std::max(scale, std::abs(val)) ||
        fr.depth >= max_depth) {
      if (fr.depth >= max_depth && err > 1e3 * (abs_tol + rel_tol * scale)) {
        throw QuadratureFailure("adaptive_gk: panel did not converge");
      }
      total += val;
      scale = std::max(scale, std::abs(total));
    } else {
      const double m = 0.5 * (fr.a + fr.b);
      stack.push_back({fr.a, m, fr.depth + 1});
      stack.push_back({m, fr.b, fr.depth + 1});
    }
  }
  return total;
}

// Least-squares slope of y against x.
inline double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("ls_slope: need >= 2 matched samples");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("ls_slope: degenerate abscissae");
  return (n * sxy - sx * sy) / denom;
}

// Slope of log|y| vs log x, skipping non-positive entries.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0 && y[i] > 0) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  }
  return ls_slope(lx, ly);
}

}  // namespace hyperwave
