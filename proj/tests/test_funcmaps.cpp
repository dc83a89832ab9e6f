#include <cmath>

#include "doctest.h"
#include "test_support.hpp"
#include "wco/analytic_map.hpp"
#include "wco/circle.hpp"
#include "wco/errors.hpp"
#include "wco/rational_map.hpp"

using namespace wco;
using wco::testing::disc_point;
using wco::testing::uniform;

TEST_CASE("polynomial evaluation and arithmetic") {
  const Polynomial p{1.0, -2.0, 3.0};  // 1 - 2z + 3z^2
  CHECK(p.degree() == 2);
  CHECK(p(2.0) == doctest::Approx(9.0));
  CHECK(std::abs(p(cplx(0, 1)) - cplx(-2, -2)) < 1e-15);
  CHECK(p.derivative() == Polynomial{-2.0, 6.0});
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  const Polynomial q{-1.0, 1.0};
  CHECK(p * q == Polynomial{-1.0, 3.0, -5.0, 3.0});
  const auto [quo, rem] = divmod(p * q + Polynomial{4.0}, q);
  CHECK(quo == p);
  CHECK(rem == Polynomial{4.0});
}

TEST_CASE("polynomial roots") {
  const Polynomial p = Polynomial{-1.0, 1.0} * Polynomial{2.0, 0.0, 1.0};  // (z-1)(z^2+2)
  auto roots = p.roots();
  REQUIRE(roots.size() == 3);
  for (cplx r : roots) CHECK(std::abs(p(r)) < 1e-12);
}

TEST_CASE("rational map cancels common factors and normalises") {
  const RationalMap r(Polynomial{-1.0, 0.0, 1.0}, Polynomial{-2.0, 2.0});  // (z^2-1)/(2z-2)
  CHECK(r.is_polynomial());
  CHECK(same_map(r, RationalMap(Polynomial{0.5, 0.5})));
  CHECK(r.den().leading() == 1.0);

  // double root in numerator and denominator
  const Polynomial d = Polynomial{-2.0, 1.0} * Polynomial{-2.0, 1.0};
  const RationalMap s(Polynomial{3.0, 1.0} * d, d * Polynomial{1.0, 1.0});
  CHECK(s.den().degree() == 1);
  CHECK(std::abs(s(0.3) - cplx(3.3 / 1.3)) < 1e-12);

  // complex-conjugate pair
  const Polynomial quad{1.0, 0.0, 1.0};
  const RationalMap u(quad * Polynomial{0.0, 1.0}, quad * Polynomial{5.0, 1.0});
  CHECK(u.is_mobius_shape());
}

TEST_CASE("rational map errors") {
  CHECK_THROWS_AS(RationalMap(Polynomial{1.0}, Polynomial{}), DomainError);
  const RationalMap r = RationalMap::mobius(1, 0, 1, -0.5);  // z/(z - 1/2)
  CHECK_THROWS_AS(r(0.5), PoleError);
  CHECK_THROWS_AS(r.derivative(0.5), PoleError);
  CHECK_THROWS_AS(RationalMap::constant(1) / RationalMap(), DomainError);
  CHECK_THROWS_AS(r.as_polynomial(), ShapeError);
}

TEST_CASE("rational arithmetic agrees with pointwise arithmetic") {
  const RationalMap a = RationalMap::mobius(2, 1, 1, 3);
  const RationalMap b(Polynomial{1.0, 0.0, 1.0}, Polynomial{4.0, 1.0});
  for (int i = 0; i < 50; ++i) {
    const cplx z = disc_point();
    CHECK(std::abs((a + b)(z) - (a(z) + b(z))) < 1e-12);
    CHECK(std::abs((a - b)(z) - (a(z) - b(z))) < 1e-12);
    CHECK(std::abs((a * b)(z) - a(z) * b(z)) < 1e-12);
    CHECK(std::abs((a / b)(z) - a(z) / b(z)) < 1e-11);
    CHECK(std::abs((2.5 * a)(z) - 2.5 * a(z)) < 1e-12);
  }
}

TEST_CASE("rational derivative matches central difference") {
  const RationalMap r(Polynomial{1.0, 2.0, 0.0, 1.0}, Polynomial{3.0, -1.0});
  for (int i = 0; i < 20; ++i) {
    const cplx z = disc_point(0.9);
    const double h = 1e-6;
    const cplx fd = (r(z + h) - r(z - h)) / (2 * h);
    CHECK(std::abs(r.derivative(z) - fd) < 1e-7);
  }
}

TEST_CASE("analytic map with exp factor") {
  const AnalyticMap e = AnalyticMap::exp();
  CHECK(std::abs(e(cplx(0, std::numbers::pi)) + 1.0) < 1e-15);
  const AnalyticMap g = RationalMap(Polynomial{0.0, 2.0}) * e;  // 2z e^z
  CHECK(g.has_exp());
  const cplx z(0.3, -0.4);
  CHECK(std::abs(g(z) - 2.0 * z * std::exp(z)) < 1e-14);
  CHECK(std::abs(g.derivative(z) - 2.0 * (1.0 + z) * std::exp(z)) < 1e-14);
  CHECK_THROWS_AS(g.rational(), ShapeError);
  CHECK(AnalyticMap(Polynomial{1.0, 1.0}).is_rational());
}

TEST_CASE("circle through three points") {
  const Circle c = circle_through_three_points(1.0, cplx(0, 1), -1.0);
  CHECK_FALSE(c.is_line);
  CHECK(std::abs(c.center) < 1e-15);
  CHECK(c.radius == doctest::Approx(1.0).epsilon(1e-15));

  const Circle c2 = circle_through_three_points(cplx(3, 1), cplx(1, 3), cplx(-1, 1));  // centre (1,1), r 2
  CHECK(std::abs(c2.center - cplx(1, 1)) < 1e-14);
  CHECK(c2.radius == doctest::Approx(2.0).epsilon(1e-14));

  const Circle line = circle_through_three_points(0.0, cplx(1, 1), cplx(2, 2));
  CHECK(line.is_line);

  CHECK_THROWS_AS(circle_through_three_points(0.5, 0.5, 1.0), DegenerateInputError);
}

TEST_CASE("circle determinants follow the three-point formulas") {
  const cplx w1(3, 1), w2(1, 3), w3(-1, 1);
  const auto det = circle_determinants(w1, w2, w3);
  const cplx k = det.d / (2.0 * det.a);
  const double r = std::sqrt(std::norm(det.d) / (4 * det.a * det.a) - det.f / det.a);
  CHECK(std::abs(k - cplx(1, 1)) < 1e-13);
  CHECK(r == doctest::Approx(2.0));
}

TEST_CASE("Moebius image of the unit disc") {
  const Circle c = mobius_image_of_unit_disc(RationalMap::mobius(0.5, 0.25, 0, 1));
  CHECK(std::abs(c.center - 0.25) < 1e-15);
  CHECK(c.radius == doctest::Approx(0.5));
  // 1/(z+3): boundary hits 1/4 and 1/2, symmetric about the real axis
  const Circle d = mobius_image_of_unit_disc(RationalMap::mobius(0, 1, 1, 3));
  CHECK(std::abs(d.center - 0.375) < 1e-14);
  CHECK(d.radius == doctest::Approx(0.125));
  CHECK_THROWS_AS(mobius_image_of_unit_disc(RationalMap::mobius(1, 0, 1, -0.5)), PoleOnDiscError);
}

TEST_CASE("property: Moebius images of the circle stay on the computed circle") {
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    double a = uniform(-2, 2), b = uniform(-2, 2), c = uniform(-1, 1), d = uniform(-2, 2);
    if (std::abs(d) < std::abs(c) + 0.1) d = (d < 0 ? -1 : 1) * (std::abs(c) + 0.1 + std::abs(d));
    if (std::abs(a * d - b * c) < 1e-3) continue;
    const RationalMap m = RationalMap::mobius(a, b, c, d);
    const Circle img = mobius_image_of_unit_disc(m);
    for (int k = 0; k < 8; ++k) {
      const cplx w = m(std::polar(1.0, uniform(0, 2 * std::numbers::pi)));
      if (std::abs(std::abs(w - img.center) - img.radius) > 1e-9 * std::max(1.0, img.radius)) ++failures;
    }
    // interior points land inside
    const cplx inside = m(disc_point(0.99));
    if (std::abs(inside - img.center) > img.radius * (1 + 1e-12)) ++failures;
  }
  CHECK(failures == 0);
}
