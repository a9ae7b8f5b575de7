#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperwave::exponents {

// One inequality (or identity) of an admissibility window: slack is the
// signed distance into the feasible side.
struct ConstraintMargin {
  std::string label;
  double slack = 0.0;
  bool strict = true;  // strict: need slack > 0; otherwise slack >= 0
  bool satisfied() const { return strict ? slack > 0.0 : slack >= 0.0; }
};

struct AdmissibilityVerdict {
  std::string window_name;
  bool satisfied = false;
  std::vector<ConstraintMargin> margins;

  void finalize() {
    satisfied = true;
    for (const auto& m : margins) satisfied = satisfied && m.satisfied();
  }
};

inline double rho_of(int n) { return (n - 1) / 2.0; }

inline void require_dimension(int n, int min_n) {
  if (n < min_n)
    throw std::invalid_argument("dimension n=" + std::to_string(n) +
                                " below minimum " + std::to_string(min_n));
}

// positive root of (n-1) p^2 - (n+1) p - 2 = 0
inline double p_strauss(int n) {
  require_dimension(n, 2);
  const double a = n - 1.0, b = -(n + 1.0), c = -2.0;
  return (-b + std::sqrt(b * b - 4.0 * a * c)) / (2.0 * a);
}

inline double p_conformal(int n) {
  require_dimension(n, 2);
  return 1.0 + 4.0 / (n - 1.0);
}

inline double p_fujita(int n) {
  require_dimension(n, 1);
  return 1.0 + 2.0 / n;
}

// Super-conformal range endpoints. p1 follows the dimension case table
// (defined only for n >= 4); p2 = 1 + 4n/(n^2-3n-2) for n >= 4 and is
// unbounded for n = 2, 3 (explicit empty optional, never an inf).
struct SuperconformalLimits {
  std::optional<double> p1;
  std::optional<double> p2;
};

inline SuperconformalLimits p_super_limits(int n) {
  require_dimension(n, 2);
  SuperconformalLimits out;
  if (n >= 4) {
    if (n == 4)
      out.p1 = 2.5;
    else if (n == 5)
      out.p1 = (6.0 + std::sqrt(21.0)) / 5.0;
    else
      out.p1 = 1.0 + 2.0 / ((n - 1.0) / 2.0 - 1.0 / (n - 1.0));
    out.p2 = 1.0 + 4.0 * n / (static_cast<double>(n) * n - 3.0 * n - 2.0);
    if (!(*out.p1 < *out.p2))
      throw std::logic_error("p_super_limits: expected p1 < p2");
  }
  return out;
}

// gamma/2 + (n-5)/(2(n-1)) - gamma/q; the disputed admissibility quantity.
inline double remark_condition_lhs(double gamma, int n, double q) {
  const double last = std::isinf(q) ? 0.0 : gamma / q;
  return gamma / 2.0 + (n - 5.0) / (2.0 * (n - 1.0)) - last;
}

// The specific failing instance: n=6, gamma=2, q=14/3, equal to 47/70 > 1/2.
inline double remark_counterexample_value() {
  const double v = remark_condition_lhs(2.0, 6, 14.0 / 3.0);
  if (!(v > 0.5)) throw std::logic_error("remark value should exceed 1/2");
  return v;
}

// All derived indices for a (n, p, q, delta) choice. gamma2 is stored via the
// identity gamma2 = gamma1 - (n-1)/2 + (n+1)/q so the identity residual is
// exactly zero for scheme-built contexts.
struct ExponentContext {
  int n = 3;
  double p = 2.0;
  double q = 3.0;
  double delta = 0.0;
  double rho = 1.0;
  double sigma = 0.5;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double s = 0.0;
  double s0 = 0.0;
  double s1 = 0.0;
};

inline ExponentContext make_context(int n, double p, double q, double gamma1,
                                    double delta = 0.0) {
  require_dimension(n, 2);
  if (!(q >= 1.0)) throw std::invalid_argument("q must be >= 1");
  ExponentContext c;
  c.n = n;
  c.p = p;
  c.q = q;
  c.delta = delta;
  c.rho = rho_of(n);
  c.sigma = 1.0 - c.rho * (p - 1.0) / 2.0;
  c.gamma1 = gamma1;
  c.gamma2 = gamma1 - (n - 1.0) / 2.0 + (n + 1.0) / q;
  c.s = (n + 1.0) * (0.5 - 1.0 / (p + 1.0));
  c.s1 = n * (0.5 - 1.0 / (p + 1.0)) + delta;
  c.s0 = c.s1;  // scheme specialization r0 = 2/(1-2*delta), r = p+1
  return c;
}

// Sub-conformal scheme: q = p+1, gamma1 = -sigma/(p+1).
inline ExponentContext make_scheme_context(int n, double p, double delta = 0.0) {
  const double rho = rho_of(n);
  const double sigma = 1.0 - rho * (p - 1.0) / 2.0;
  return make_context(n, p, p + 1.0, -sigma / (p + 1.0), delta);
}

// Lemma-style window: 2 <= q <= 2(n+1)/(n-1) (non-strict),
// gamma1 < (n-1)/2 - n/q (strict), gamma2 identity (residual within 1e-12).
inline AdmissibilityVerdict weighted_strichartz_admissible(const ExponentContext& c) {
  AdmissibilityVerdict v;
  v.window_name = "weighted_strichartz";
  const double q_hi = 2.0 * (c.n + 1.0) / (c.n - 1.0);
  v.margins.push_back({"q_lower (q >= 2)", c.q - 2.0, false});
  v.margins.push_back({"q_upper (q <= 2(n+1)/(n-1))", q_hi - c.q, false});
  v.margins.push_back(
      {"gamma1 (gamma1 < (n-1)/2 - n/q)", (c.n - 1.0) / 2.0 - c.n / c.q - c.gamma1, true});
  const double residual = c.gamma2 - (c.gamma1 - (c.n - 1.0) / 2.0 + (c.n + 1.0) / c.q);
  v.margins.push_back({"gamma2 identity residual", 1e-12 - std::abs(residual), false});
  v.finalize();
  return v;
}

// The decay-weight condition 2*gamma1 - rho + (n+1)/q < (n-1)(1/2 - 1/q),
// together with its two equivalent restatements; all three margins must
// share one sign for the chain to be consistent.
inline AdmissibilityVerdict dispersive_weight_condition(const ExponentContext& c) {
  AdmissibilityVerdict v;
  v.window_name = "dispersive_weight";
  const double lhs = 2.0 * c.gamma1 - c.rho + (c.n + 1.0) / c.q;
  const double rhs = (c.n - 1.0) * (0.5 - 1.0 / c.q);
  v.margins.push_back({"weight_exponent (lhs < rhs)", rhs - lhs, true});
  v.margins.push_back(
      {"equivalent (gamma1 + n/(p+1) < rho)", c.rho - (c.gamma1 + c.n / (c.p + 1.0)), true});
  v.margins.push_back({"equivalent (p > 1)", c.p - 1.0, true});
  v.finalize();
  return v;
}

struct HomogeneousWindow {
  AdmissibilityVerdict verdict;
  double s0 = 0.0;
};

// 1/q > (n-1)(1/2 - 1/r0) with s0 = (n+1)/2 - 1/r0 - n/r.
inline HomogeneousWindow homogeneous_strichartz_window(int n, double q, double r,
                                                       double r0) {
  require_dimension(n, 2);
  if (!(q >= 1.0)) throw std::invalid_argument("q must be in [1, inf)");
  if (!(r > 2.0)) throw std::invalid_argument("r must be in (2, inf)");
  if (!(r0 > 2.0 && r0 <= r)) throw std::invalid_argument("r0 must lie in (2, r]");
  HomogeneousWindow out;
  out.s0 = (n + 1.0) / 2.0 - 1.0 / r0 - n / r;
  out.verdict.window_name = "homogeneous_strichartz";
  out.verdict.margins.push_back(
      {"time_integrability (1/q > (n-1)(1/2-1/r0))",
       1.0 / q - (n - 1.0) * (0.5 - 1.0 / r0), true});
  out.verdict.finalize();
  return out;
}

struct HomogeneousSpecialization {
  AdmissibilityVerdict verdict;
  double s1 = 0.0;
};

// Specialization giving the L^{p+1} space-time estimate: s1 = n(1/2-1/(p+1)) + delta,
// with delta < 1/((n-1)(p+1)) (strict) and delta <= 1/2 - 1/(p+1) (non-strict).
inline HomogeneousSpecialization homogeneous_strichartz_specialization(int n, double p,
                                                                       double delta) {
  require_dimension(n, 2);
  HomogeneousSpecialization out;
  out.s1 = n * (0.5 - 1.0 / (p + 1.0)) + delta;
  out.verdict.window_name = "homogeneous_specialization";
  out.verdict.margins.push_back({"delta > 0", delta, true});
  out.verdict.margins.push_back(
      {"delta < 1/((n-1)(p+1))", 1.0 / ((n - 1.0) * (p + 1.0)) - delta, true});
  out.verdict.margins.push_back(
      {"delta <= 1/2 - 1/(p+1)", 0.5 - 1.0 / (p + 1.0) - delta, false});
  out.verdict.finalize();
  return out;
}

struct SuperconformalParams {
  double p0 = 0.0;
  double p1_dual = 0.0;  // p1' = p0 / p
  double r0 = 0.0;
  double s0 = 0.0;
  double q = 0.0;
  AdmissibilityVerdict verdict;
};

// Parameter choices p0 = (n+1)(p-1)/2, p1' = p0/p, r0 = 2/(1-2 delta),
// s0 = n/(n+1) + delta with q = 2(n+1)/(n-1), plus the exponent-range and
// Sobolev-gap constraints. The Sobolev gap 1 >= n/q - 2n/((n+1)(p-1)) holds
// exactly when p <= p2(n).
inline SuperconformalParams superconformal_params(int n, double p, double delta) {
  require_dimension(n, 2);
  if (!(p > p_conformal(n)))
    throw std::invalid_argument("superconformal_params requires p > p_conf(n)");
  const double delta_hi = 2.0 / ((static_cast<double>(n) * n - 1.0) * (p - 1.0));
  if (!(delta > 0.0 && delta < delta_hi))
    throw std::invalid_argument("delta outside (0, 2/((n^2-1)(p-1)))");

  SuperconformalParams out;
  out.p0 = (n + 1.0) * (p - 1.0) / 2.0;
  out.p1_dual = out.p0 / p;
  out.r0 = 2.0 / (1.0 - 2.0 * delta);
  out.s0 = n / (n + 1.0) + delta;
  out.q = 2.0 * (n + 1.0) / (n - 1.0);

  auto& v = out.verdict;
  v.window_name = "superconformal";
  const double inv_sum = 1.0 / out.p0 + (1.0 - p / out.p0);  // 1/p0 + 1/p1
  v.margins.push_back(
      {"exponent_sum lower (1/p0 + 1/p1 >= (n-1)/(n+1))",
       inv_sum - (n - 1.0) / (n + 1.0), false});
  v.margins.push_back({"exponent_sum upper (1/p0 + 1/p1 <= 1)", 1.0 - inv_sum, false});
  v.margins.push_back(
      {"time_integrability (1/p0 > (n-1)(1/2-1/r0))",
       1.0 / out.p0 - (n - 1.0) * (0.5 - 1.0 / out.r0), true});
  v.margins.push_back({"r0_range (r0 <= q)", out.q - out.r0, false});
  const double sobolev_gap = 1.0 - (n / out.q - 2.0 * n / ((n + 1.0) * (p - 1.0)));
  v.margins.push_back({"sobolev_gap (1 >= n/q - 2n/((n+1)(p-1)))", sobolev_gap, false});
  v.finalize();
  return out;
}

}  // namespace hyperwave::exponents
