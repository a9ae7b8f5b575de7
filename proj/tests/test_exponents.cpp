#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "hyperwave/exponents.hpp"

using namespace hyperwave::exponents;

namespace {
// exact-rational cross-check helper for the table values
struct Frac {
  long long num, den;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};
}  // namespace

TEST_CASE("critical exponents reproduce the stated table", "[exponents]") {
  CHECK(p_strauss(3) == Catch::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-14));
  CHECK(p_strauss(2) == Catch::Approx((3.0 + std::sqrt(17.0)) / 2.0).epsilon(1e-14));
  CHECK(p_strauss(4) == Catch::Approx(2.0).margin(1e-14));

  CHECK(p_conformal(3) == Catch::Approx(3.0).margin(1e-15));
  CHECK(p_conformal(2) == Catch::Approx(5.0).margin(1e-15));
  CHECK(p_conformal(5) == Catch::Approx(2.0).margin(1e-15));

  CHECK(p_fujita(2) == Catch::Approx(2.0).margin(1e-15));
  CHECK(p_fujita(1) == Catch::Approx(3.0).margin(1e-15));
  CHECK(p_fujita(3) == Catch::Approx(Frac{5, 3}.value()).margin(1e-15));

  CHECK_THROWS_AS(p_strauss(1), std::invalid_argument);
  CHECK_THROWS_AS(p_conformal(1), std::invalid_argument);
  CHECK_THROWS_AS(p_fujita(0), std::invalid_argument);
}

TEST_CASE("strauss root satisfies its quadratic", "[exponents]") {
  for (int n = 2; n <= 10; ++n) {
    const double p = p_strauss(n);
    const double residual = (n - 1.0) * p * p - (n + 1.0) * p - 2.0;
    CHECK(std::abs(residual) < 1e-12);
    CHECK(p > 1.0);
  }
}

TEST_CASE("exponent ordering p_F < p_S < p_conf", "[exponents]") {
  for (int n = 2; n <= 10; ++n) {
    CHECK(p_fujita(n) < p_strauss(n));
    CHECK(p_strauss(n) < p_conformal(n));
  }
}

TEST_CASE("super-conformal limits match the case table", "[exponents]") {
  auto l4 = p_super_limits(4);
  REQUIRE(l4.p1.has_value());
  REQUIRE(l4.p2.has_value());
  CHECK(*l4.p1 == Catch::Approx(Frac{5, 2}.value()).margin(1e-15));
  CHECK(*l4.p2 == Catch::Approx(9.0).margin(1e-12));

  auto l5 = p_super_limits(5);
  CHECK(*l5.p1 == Catch::Approx((6.0 + std::sqrt(21.0)) / 5.0).epsilon(1e-14));
  CHECK(*l5.p2 == Catch::Approx(Frac{7, 2}.value()).margin(1e-12));

  auto l6 = p_super_limits(6);
  CHECK(*l6.p1 == Catch::Approx(Frac{43, 23}.value()).epsilon(1e-14));
  CHECK(*l6.p2 == Catch::Approx(Frac{5, 2}.value()).margin(1e-12));

  for (int n : {2, 3}) {
    auto l = p_super_limits(n);
    CHECK_FALSE(l.p1.has_value());
    CHECK_FALSE(l.p2.has_value());  // unbounded
  }
  for (int n = 4; n <= 10; ++n) {
    auto l = p_super_limits(n);
    CHECK(*l.p1 < *l.p2);
  }
  CHECK_THROWS_AS(p_super_limits(1), std::invalid_argument);
}

TEST_CASE("remark counterexample value", "[exponents]") {
  const double v = remark_counterexample_value();
  CHECK(v == Catch::Approx(Frac{47, 70}.value()).epsilon(1e-14));
  CHECK(v > 0.5);
  // dropping the gamma/q term (q = infinity)
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(remark_condition_lhs(2.0, 6, inf) == Catch::Approx(1.1).epsilon(1e-14));
}

TEST_CASE("scheme context derived indices", "[exponents]") {
  auto c = make_scheme_context(3, 2.0);
  CHECK(c.rho == 1.0);
  CHECK(c.sigma == Catch::Approx(0.5).margin(1e-15));
  CHECK(c.q == 3.0);
  CHECK(c.gamma1 == Catch::Approx(-1.0 / 6.0).epsilon(1e-14));
  CHECK(c.gamma2 == Catch::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(c.s == Catch::Approx(4.0 * (0.5 - 1.0 / 3.0)).epsilon(1e-14));
  // identity residual is exactly zero by construction
  CHECK(c.gamma2 - (c.gamma1 - (c.n - 1.0) / 2.0 + (c.n + 1.0) / c.q) == 0.0);
  // s = (n+1)(1/2 - 1/(p+1))
  auto c3 = make_scheme_context(3, 3.0);
  CHECK(c3.sigma == 0.0);
  CHECK(c3.gamma1 == 0.0);
  CHECK(c3.gamma2 == Catch::Approx(0.0).margin(1e-15));
  CHECK(c3.s == Catch::Approx(1.0).margin(1e-15));
}

TEST_CASE("weighted Strichartz admissibility window", "[exponents]") {
  // conformal case n=3, p=3: gamma1 slack is exactly 1/4
  auto v = weighted_strichartz_admissible(make_scheme_context(3, 3.0));
  CHECK(v.satisfied);
  REQUIRE(v.margins.size() == 4);
  CHECK(v.margins[2].slack == Catch::Approx(0.25).epsilon(1e-13));

  CHECK(weighted_strichartz_admissible(make_scheme_context(3, 2.0)).satisfied);

  // explicit q = 5 violates q <= 2(n+1)/(n-1) = 4
  auto bad = weighted_strichartz_admissible(make_context(3, 2.0, 5.0, 0.0));
  CHECK_FALSE(bad.satisfied);
  CHECK_FALSE(bad.margins[1].satisfied());
  CHECK(bad.margins[0].satisfied());

  // scheme admissible exactly on 1 < p <= p_conf
  for (double p = 1.05; p <= 3.0 + 1e-9; p += 0.05) {
    CHECK(weighted_strichartz_admissible(make_scheme_context(3, p)).satisfied);
  }
  auto above = weighted_strichartz_admissible(make_scheme_context(3, p_conformal(3) + 0.01));
  CHECK_FALSE(above.satisfied);
  CHECK(above.margins[0].satisfied());
  CHECK_FALSE(above.margins[1].satisfied());  // exactly the q-range constraint
  CHECK(above.margins[2].satisfied());
  CHECK(above.margins[3].satisfied());
}

TEST_CASE("dispersive weight condition iff p > 1", "[exponents]") {
  CHECK(dispersive_weight_condition(make_scheme_context(3, 2.0)).satisfied);
  // p = 1 is the equality endpoint
  auto boundary = dispersive_weight_condition(make_scheme_context(3, 1.0));
  CHECK_FALSE(boundary.satisfied);
  CHECK(boundary.margins[0].slack == Catch::Approx(0.0).margin(1e-14));
  // small positive slack just above p = 1 in higher dimension
  auto near = dispersive_weight_condition(make_scheme_context(5, 1.01));
  CHECK(near.satisfied);
  CHECK(near.margins[0].slack > 0.0);
  CHECK(near.margins[0].slack < 0.05);

  for (double p = 0.55; p < 5.0; p += 0.1) {
    auto v = dispersive_weight_condition(make_scheme_context(3, p));
    CHECK(v.satisfied == (p > 1.0));
    // the three reformulations agree in sign
    CHECK(v.margins[0].satisfied() == v.margins[2].satisfied());
    CHECK(v.margins[1].satisfied() == v.margins[2].satisfied());
  }
}

TEST_CASE("homogeneous Strichartz window", "[exponents]") {
  auto w1 = homogeneous_strichartz_window(3, 4.0, 4.0, 4.0);
  CHECK_FALSE(w1.verdict.satisfied);  // 1/4 > 1/2 fails

  auto w2 = homogeneous_strichartz_window(3, 4.0, 4.0, 2.2);
  CHECK(w2.verdict.satisfied);
  CHECK(w2.s0 == Catch::Approx(2.0 - 1.0 / 2.2 - 3.0 / 4.0).epsilon(1e-14));

  CHECK_THROWS_AS(homogeneous_strichartz_window(3, 4.0, 4.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(homogeneous_strichartz_window(3, 4.0, 4.0, 4.5), std::invalid_argument);

  auto sp = homogeneous_strichartz_specialization(3, 3.0, 0.05);
  CHECK(sp.verdict.satisfied);
  CHECK(sp.s1 == Catch::Approx(0.8).epsilon(1e-14));
  CHECK_FALSE(homogeneous_strichartz_specialization(3, 3.0, 0.2).verdict.satisfied);
}

TEST_CASE("super-conformal parameter choices", "[exponents]") {
  auto sc = superconformal_params(4, 4.0, 0.01);
  CHECK(sc.p0 == Catch::Approx(7.5).margin(1e-14));
  CHECK(sc.q == Catch::Approx(10.0 / 3.0).epsilon(1e-14));
  CHECK(sc.verdict.satisfied);
  // independent arithmetic: n/q - 2n/((n+1)(p-1)) = 1.2 - 8/15 <= 1
  const double gap_lhs = 4.0 / sc.q - 8.0 / 15.0;
  CHECK(gap_lhs < 1.0);

  // n=3 has p2 = unbounded: any super-conformal p admissible
  CHECK(superconformal_params(3, 4.0, 0.05).verdict.satisfied);

  // just above p2(4) = 9 the Sobolev gap fails
  auto bad = superconformal_params(4, 10.0, 0.01);
  CHECK_FALSE(bad.verdict.satisfied);
  CHECK_FALSE(bad.verdict.margins.back().satisfied());
  // at p = p2 exactly, the non-strict gap holds with zero slack
  auto edge = superconformal_params(4, 9.0, 0.01);
  CHECK(edge.verdict.satisfied);
  CHECK(edge.verdict.margins.back().slack == Catch::Approx(0.0).margin(1e-12));

  CHECK_THROWS_AS(superconformal_params(4, 2.0, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(superconformal_params(4, 4.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(superconformal_params(4, 4.0, 0.0), std::invalid_argument);
}
