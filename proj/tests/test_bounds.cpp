#include <cmath>
#include <numbers>

#include "doctest.h"
#include "test_support.hpp"
#include "wco/bounds.hpp"
#include "wco/errors.hpp"
#include "wco/presets.hpp"

using namespace wco;
using wco::testing::disc_point;
using wco::testing::uniform;

TEST_CASE("linear fractional data of the Cesàro operator") {
  const auto lf = lf_data(preset_spec("cesaro"));  // γ = tz / ((t − 1)z + 1)
  for (double t : {0.1, 0.5, 0.9}) {
    CHECK(lf.a1(t) == doctest::Approx(t));
    CHECK(lf.a0(t) == 0.0);
    CHECK(lf.b1(t) == doctest::Approx(t - 1));
    CHECK(lf.b0(t) == doctest::Approx(1.0));
    CHECK(delta(lf, t) == doctest::Approx(t));
  }
  const OperatorSpec quad(RationalMap::constant(0), RationalMap::identity(), AnalyticMap(Polynomial{0, 0, 1}),
                          AnalyticMap::constant(1));
  CHECK_THROWS_AS(lf_data(quad), NotLinearFractionalError);
}

TEST_CASE("delta and gap near the endpoints") {
  const auto lf = lf_data(preset_spec("hilbert"));  // δ = t(1 − t)
  const UnitPoint u{1.0 - 1e-300, 1e-300};
  CHECK(delta(lf, u) == doctest::Approx(1e-300).epsilon(1e-12));
  CHECK(b_gap(lf, UnitPoint{1e-20, 1.0}) == doctest::Approx(1e-20).epsilon(1e-10));
}

TEST_CASE("A_alpha domain") {
  const auto lf = lf_data(preset_spec("cesaro"));
  CHECK(A_alpha(lf, 0.5, 1.0) > 0);
  CHECK_THROWS_AS(A_alpha(lf, 0.5, 2.0), DomainError);
  const auto mod = lf_data(preset_spec("modified-cesaro"));
  CHECK_THROWS_AS(A_alpha(mod, 0.25, 1.0), DomainError);
}

TEST_CASE("prop4 conditions") {
  for (const auto& name : named_operator_presets()) {
    CAPTURE(name);
    CHECK(prop4_conditions(lf_data(preset_spec(name))).pass);
  }
  const Certificate bad = prop4_conditions(lf_data(preset_spec("modified-cesaro")));
  CHECK_FALSE(bad.pass);
  REQUIRE_FALSE(bad.witnesses.empty());
  CHECK(bad.witnesses[0].note.find("|b1|<|b0| fails") != std::string::npos);
  CHECK(bad.witnesses[0].margin < 0);
}

TEST_CASE("endpoint-singular integration") {
  auto inv_sqrt = [](UnitPoint u) { return 1.0 / std::sqrt(u.t); };
  const auto a = integrate_endpoint_singular(inv_sqrt);
  REQUIRE(a.value);
  CHECK(*a.value == doctest::Approx(2.0).epsilon(1e-10));
  const auto b = integrate_endpoint_singular([](UnitPoint u) { return 1.0 / std::sqrt(u.t * u.tc); });
  CHECK(*b.value == doctest::Approx(std::numbers::pi).epsilon(1e-10));
  const auto left = integrate_endpoint_singular([](UnitPoint u) { return 1.0 / u.t; });
  CHECK(left.divergent);
  CHECK_FALSE(left.value);
  CHECK(left.divergent_end == "left");
  const auto right = integrate_endpoint_singular([](UnitPoint u) { return 1.0 / u.tc; });
  CHECK(right.divergent_end == "right");
  // a kink at 1/2 is handled by splitting
  const auto kink = integrate_endpoint_singular([](UnitPoint u) { return std::abs(u.t - 0.5); }, {}, {0.5});
  CHECK(*kink.value == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("prop4 bound closed forms") {
  auto bound = [](const char* name, double alpha) {
    return prop4_bound(lf_data(preset_spec(name)), alpha);
  };
  CHECK(*bound("cesaro", 1.5).bound_value == doctest::Approx(4.0).epsilon(1e-8));
  CHECK(*bound("cesaro", 0.5).bound_value == doctest::Approx(3.2).epsilon(1e-8));
  CHECK(*bound("j", 1.5).bound_value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
  // B(1/4, 1/4) = Γ(1/4)² / Γ(1/2)
  const double beta = std::tgamma(0.25) * std::tgamma(0.25) / std::sqrt(std::numbers::pi);
  CHECK(*bound("hilbert", 1.5).bound_value == doctest::Approx(beta).epsilon(1e-8));
  const BoundReport r = bound("reduced-hilbert", 1.0);
  CHECK(r.delta_integrable);
  CHECK(r.conditions == std::array<bool, 3>{true, true, true});
  const BoundReport m = prop4_bound(lf_data(preset_spec("modified-cesaro")), 1.0);
  CHECK_FALSE(m.conditions[2]);
  CHECK_FALSE(m.bound_value);
}

TEST_CASE("two-term bracket and its t-integral for the adjoint Cesàro operator") {
  // w = 1, ∂zγ = t: area 0, sup t^(−α); ∫ t^(−1/2) dt = 2
  const OperatorSpec adj = preset_spec("adjoint-cesaro");
  const Lemma2Terms l = lemma2_bracket(adj, 0.5, 1.0);
  CHECK(l.area == doctest::Approx(0.0));
  CHECK(l.sup == doctest::Approx(2.0).epsilon(1e-9));
  const Theorem3Result th = theorem3_bound(adj, 1.0);
  REQUIRE(th.value);
  CHECK(*th.value == doctest::Approx(2.0).epsilon(1e-5));
  CHECK_THROWS_AS(lemma2_bracket(adj, 0.0, 1.0), DomainError);
}

TEST_CASE("area term against direct polar quadrature") {
  // Cesàro: |∂z w|² / |∂z γ|^α = (1 − t)² |1 − (1 − t)z|^(2α − 4) / t^α, bounded on the closed disc
  const OperatorSpec ces = preset_spec("cesaro");
  const double t = 0.5, alpha = 1.0;
  // closed form for α = 1: (1/t)(1 − t)² ∫ |1 − cz|^(−2) dm = (1 − t)² / t · (−log(1 − c²)) / c², c = 1 − t
  const double c = 1 - t;
  const double want = c * c / t * (-std::log(1 - c * c)) / (c * c);
  CHECK(area_term(ces, t, alpha, AreaQuadConfig{}) == doctest::Approx(want).epsilon(1e-6));
}

TEST_CASE("property: gamma from linear fractional data agrees with the kernel") {
  int failures = 0;
  const auto names = named_operator_presets();
  for (int i = 0; i < 1000; ++i) {
    const OperatorSpec spec = preset_spec(names[i % names.size()]);
    const auto lf = lf_data(spec);
    const double t = uniform(0.001, 0.999);
    const cplx z = disc_point();
    if (std::abs(lf.gamma(t, z) - kernel(spec, t, z).gamma) > 1e-12) ++failures;
  }
  CHECK(failures == 0);
}
