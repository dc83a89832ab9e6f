#include "wco/selfmap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wco/errors.hpp"

namespace wco {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0.0 ? a + kTwoPi : a;
}

}  // namespace

TMobius t_mobius(const OperatorSpec& spec, cplx z) {
  const auto seg = segment(spec, z);
  const cplx p = spec.p()(z), q = spec.q()(z);
  TMobius tm;
  tm.r1 = seg.length * q;
  tm.r2 = seg.phi1z * (p * seg.phi2z + q);
  tm.r3 = -seg.length * p;
  tm.r4 = p * seg.phi2z + q;
  tm.end0 = seg.phi1z;
  tm.end1 = seg.phi2z;
  const cplx a = tm.r1 * tm.r4, b = tm.r2 * tm.r3;
  tm.constant_in_t = std::abs(a - b) <= 1e-13 * std::max({std::abs(a), std::abs(b), 1e-300}) ||
                     (std::abs(a) == 0.0 && std::abs(b) == 0.0);
  return tm;
}

bool Arc::contains_angle(double theta) const {
  const double d = wrap(theta - theta0);
  constexpr double eps = 1e-12;
  if (sweep >= 0.0) return d <= sweep + eps || d >= kTwoPi - eps;
  return d >= kTwoPi + sweep - eps || d <= eps;
}

cplx Arc::point_at(double s) const {
  if (carrier.is_line) return e0 + s * (e1 - e0);
  return carrier.center + std::polar(carrier.radius, theta0 + s * sweep);
}

Arc arc_of_t(const TMobius& tm) {
  if (tm.constant_in_t) throw DegenerateInputError("arc_of_t: gamma is constant in t");
  Arc arc;
  const double scale = std::abs(tm.r1) + std::abs(tm.r2) + std::abs(tm.r4);
  const bool affine = std::abs(tm.r3) <= 1e-14 * scale;

  if (!affine) {
    // A real pole t* = −R4/R3 in [0, 1] sends part of the path through ∞.
    const cplx tstar = -tm.r4 / tm.r3;
    if (std::abs(tstar.imag()) <= 1e-14 * std::max(1.0, std::abs(tstar)) && tstar.real() >= -1e-14 &&
        tstar.real() <= 1.0 + 1e-14) {
      arc.unbounded = true;
      arc.max_modulus = std::numeric_limits<double>::infinity();
      arc.excluded = tm.r1 / tm.r3;
      arc.carrier.is_line = true;
      return arc;
    }
  }
  arc.e0 = tm.end0 ? *tm.end0 : tm.r2 / tm.r4;
  arc.e1 = tm.end1 ? *tm.end1 : (tm.r1 + tm.r2) / (tm.r3 + tm.r4);

  auto as_segment = [&] {
    arc.carrier = Circle{};
    arc.carrier.is_line = true;
    arc.carrier.line_a = arc.e0;
    arc.carrier.line_b = arc.e1;
    arc.max_modulus = std::max(std::abs(arc.e0), std::abs(arc.e1));
    return arc;
  };

  if (affine) return as_segment();

  const cplx einf = tm.r1 / tm.r3;
  arc.excluded = einf;
  arc.carrier = circle_through_three_points(arc.e0, arc.e1, einf);
  if (arc.carrier.is_line) {
    // Collinear images; the pole test above already ruled out ∞ on the path,
    // so γ(∞) lies outside the segment [e0, e1].
    return as_segment();
  }

  const cplx c = arc.carrier.center;
  const double r = arc.carrier.radius;
  arc.theta0 = std::arg(arc.e0 - c);
  const double d1 = wrap(std::arg(arc.e1 - c) - arc.theta0);
  const double dinf = wrap(std::arg(einf - c) - arc.theta0);
  arc.sweep = dinf < d1 ? d1 - kTwoPi : d1;

  arc.max_modulus = std::max(std::abs(arc.e0), std::abs(arc.e1));
  if (std::abs(c) > 1e-15 * r) {
    if (arc.contains_angle(std::arg(c))) arc.max_modulus = std::abs(c) + r;
  } else {
    arc.max_modulus = std::max(arc.max_modulus, r);
  }
  return arc;
}

Certificate selfmap_certificate_exact(const OperatorSpec& spec, const DiscGrid& zgrid) {
  if (zgrid.points.empty()) throw DomainError("empty grid");
  Certificate cert;
  cert.kind = CertificateKind::selfmap_arc;
  cert.grid = "polar " + std::to_string(zgrid.radii) + "x" + std::to_string(zgrid.angles);
  for (const cplx z : zgrid.points) {
    double max_mod;
    try {
      const TMobius tm = t_mobius(spec, z);
      if (tm.constant_in_t) {
        max_mod = std::abs(tm.r4) > 0.0 ? std::abs(tm.r2 / tm.r4) : std::abs((tm.r1 + tm.r2) / (tm.r3 + tm.r4));
      } else {
        max_mod = arc_of_t(tm).max_modulus;
      }
    } catch (const Error& e) {
      cert.record({std::nullopt, z, -std::numeric_limits<double>::max(), e.what()}, false);
      continue;
    }
    const double margin = std::isfinite(max_mod) ? 1.0 - max_mod : -std::numeric_limits<double>::max();
    cert.record({std::nullopt, z, margin, "max_modulus=" + std::to_string(max_mod)}, max_mod <= 1.0 + 1e-12);
  }
  return cert;
}

}  // namespace wco
