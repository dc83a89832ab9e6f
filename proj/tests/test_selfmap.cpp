#include <cmath>

#include "doctest.h"
#include "test_support.hpp"
#include "wco/certificates.hpp"
#include "wco/errors.hpp"
#include "wco/presets.hpp"
#include "wco/selfmap.hpp"

using namespace wco;
using wco::testing::disc_point;
using wco::testing::uniform;

TEST_CASE("polar grid") {
  const DiscGrid g = DiscGrid::polar(5, 8, 0.9);
  CHECK(g.points.size() == 1 + 4 * 8);
  double rmax = 0;
  for (cplx z : g.points) rmax = std::max(rmax, std::abs(z));
  CHECK(rmax == doctest::Approx(0.9));
  const auto tg = interior_t_grid(3);
  REQUIRE(tg.size() == 3);
  CHECK(tg[0] == 0.25);
  CHECK(tg[2] == 0.75);
}

TEST_CASE("t-Moebius form reproduces the kernel") {
  for (const auto& name : named_operator_presets()) {
    const OperatorSpec spec = preset_spec(name);
    const cplx z(0.4, -0.3);
    const TMobius tm = t_mobius(spec, z);
    for (double t : {0.0, 0.2, 0.7, 1.0}) CHECK(std::abs(tm(t) - kernel(spec, t, z).gamma) < 1e-14);
  }
  // Hilbert at z = 0 is γ = t: R1 R4 − R2 R3 ≠ 0, but the adjoint Cesàro at z = 1 is constant
  CHECK(t_mobius(preset_spec("adjoint-cesaro"), 1.0).constant_in_t);
  CHECK_THROWS_AS(arc_of_t(t_mobius(preset_spec("adjoint-cesaro"), 1.0)), DegenerateInputError);
}

TEST_CASE("arc geometry") {
  // Cesàro: γ(t, z) = tz / (1 − (1 − t)z) runs from 0 to z
  const cplx z(0.5, 0.5);
  const Arc arc = arc_of_t(t_mobius(preset_spec("cesaro"), z));
  CHECK(std::abs(arc.e0) < 1e-15);
  CHECK(std::abs(arc.e1 - z) < 1e-15);
  CHECK_FALSE(arc.unbounded);
  double brute = 0;
  for (int i = 0; i <= 4000; ++i) brute = std::max(brute, std::abs(kernel(preset_spec("cesaro"), i / 4000.0, z).gamma));
  CHECK(arc.max_modulus >= brute - 1e-12);
  CHECK(arc.max_modulus <= brute + 1e-6);
  for (double s : {0.0, 0.3, 1.0}) {
    const cplx w = arc.point_at(s);
    CHECK(std::abs(std::abs(w - arc.carrier.center) - arc.carrier.radius) < 1e-12);
  }
  // adjoint Cesàro: straight segment from 1 to z
  const Arc seg = arc_of_t(t_mobius(preset_spec("adjoint-cesaro"), cplx(0, 0.5)));
  CHECK(seg.carrier.is_line);
  CHECK(seg.max_modulus == doctest::Approx(1.0));
}

TEST_CASE("certificates pass for the named operators") {
  const DiscGrid grid = DiscGrid::polar(9, 32);
  for (const auto& name : named_operator_presets()) {
    CAPTURE(name);
    const OperatorSpec spec = preset_spec(name);
    CHECK(well_defined_certificate(spec, grid).pass);
    CHECK(selfmap_condition_sampled(spec, interior_t_grid(15), grid).pass);
    CHECK(selfmap_certificate_exact(spec, grid).pass);
  }
}

TEST_CASE("modified Cesàro fails with witnesses") {
  const OperatorSpec mod = preset_spec("modified-cesaro");
  const DiscGrid grid = DiscGrid::polar(9, 32);
  // single node where |N| = 0.075 > |D| = 0.05
  const Certificate one = selfmap_condition_sampled(mod, {0.25}, DiscGrid{{0.6}, 1, 1, 0.6});
  CHECK_FALSE(one.pass);
  REQUIRE(one.witnesses.size() == 1);
  CHECK(one.witnesses[0].margin == doctest::Approx(-0.025));
  for (const Certificate& c : {well_defined_certificate(mod, grid), selfmap_condition_sampled(mod, interior_t_grid(15), grid),
                               selfmap_certificate_exact(mod, grid)}) {
    CHECK_FALSE(c.pass);
    REQUIRE_FALSE(c.witnesses.empty());
    CHECK(c.witnesses.size() <= Certificate::kMaxWitnesses);
    for (const Witness& w : c.witnesses) CHECK(w.margin < 0);
    CHECK(c.failures >= c.witnesses.size());
  }
}

TEST_CASE("grids outside the disc are rejected") {
  CHECK_THROWS_AS(well_defined_certificate(preset_spec("cesaro"), DiscGrid{{1.5}, 1, 1, 1.5}), DomainError);
}

TEST_CASE("property: sampled arc points lie on the carrier and inside the max modulus") {
  int failures = 0;
  const auto names = named_operator_presets();
  for (int i = 0; i < 1000; ++i) {
    const OperatorSpec spec = preset_spec(names[i % names.size()]);
    const cplx z = disc_point();
    const TMobius tm = t_mobius(spec, z);
    if (tm.constant_in_t) continue;
    const Arc arc = arc_of_t(tm);
    const double t = uniform(0, 1);
    const cplx g = tm(t);
    if (std::abs(g) > arc.max_modulus + 1e-12) ++failures;
    if (arc.carrier.is_line) {
      const cplx d = arc.carrier.line_b - arc.carrier.line_a;
      if (std::abs(std::imag((g - arc.carrier.line_a) * std::conj(d))) > 1e-12 * std::max(1.0, std::abs(d))) ++failures;
    } else if (std::abs(std::abs(g - arc.carrier.center) - arc.carrier.radius) > 1e-10 * std::max(1.0, arc.carrier.radius)) {
      ++failures;
    }
  }
  CHECK(failures == 0);
}
