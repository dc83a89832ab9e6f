#include <cmath>
#include <numbers>

#include "doctest.h"
#include "wco/errors.hpp"
#include "wco/quadrature.hpp"

using namespace wco;

TEST_CASE("Gauss-Legendre rule integrates polynomials exactly") {
  const auto& rule = gauss_legendre(8);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.x.size(); ++i) s += rule.w[i] * std::pow(rule.x[i], 14);
  CHECK(s == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
}

TEST_CASE("composite Gauss-Legendre") {
  QuadratureConfig cfg;
  cfg.nodes = 16;
  auto r = integrate_gauss_legendre<double>([](double t) { return std::exp(t); }, 0.0, 1.0, cfg);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(std::numbers::e - 1).epsilon(1e-14));
  auto c = integrate<std::complex<double>>([](double t) { return std::exp(std::complex<double>(0, t)); }, 0.0,
                                           std::numbers::pi, cfg);
  CHECK(std::abs(c.value - std::complex<double>(0, 2)) < 1e-13);
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
  auto r = integrate_tanh_sinh_unit<double>([](UnitPoint u) { return 1.0 / std::sqrt(u.t); }, 1e-12, 12);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-11));
  auto l = integrate_tanh_sinh_unit<double>([](UnitPoint u) { return std::log(u.tc); }, 1e-12, 12);
  CHECK(l.value == doctest::Approx(-1.0).epsilon(1e-11));
  // exact complement: 1/sqrt(t(1-t)) integrates to pi
  auto a = integrate_tanh_sinh_unit<double>([](UnitPoint u) { return 1.0 / std::sqrt(u.t * u.tc); }, 1e-12, 12);
  CHECK(a.value == doctest::Approx(std::numbers::pi).epsilon(1e-11));
}

TEST_CASE("vector-valued tanh-sinh") {
  auto r = integrate_tanh_sinh_unit<std::vector<double>>(
      [](UnitPoint u) { return std::vector<double>{1.0, u.t, u.t * u.t}; }, 1e-13, 12);
  REQUIRE(r.value.size() == 3);
  CHECK(r.value[1] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(r.value[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("quadrature configuration is validated") {
  QuadratureConfig cfg;
  cfg.nodes = 1;
  CHECK_THROWS_AS(validate(cfg), DomainError);
  cfg.nodes = 8;
  cfg.tol = 0;
  CHECK_THROWS_AS(validate(cfg), DomainError);
  cfg.tol = 1e-300;
  cfg.max_refinements = 1;
  CHECK_THROWS_AS(integrate<double>([](double t) { return std::sin(200 * t); }, 0.0, 1.0, cfg), NonConvergenceError);
}
