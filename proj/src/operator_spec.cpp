#include "wco/operator_spec.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "wco/circle.hpp"
#include "wco/errors.hpp"

namespace wco {

void check_disc_self_map(const RationalMap& m, const char* what) {
  if (!m.is_mobius_shape()) throw SpecError(std::string(what) + " is not linear fractional");
  if (m.is_constant()) {
    if (std::abs(m.num().coeff(0) / m.den().coeff(0)) > 1.0 + 1e-12)
      throw SpecError(std::string(what) + " is a constant outside the closed disc");
    return;
  }
  Circle img;
  try {
    img = mobius_image_of_unit_disc(m);
  } catch (const Error& e) {
    throw SpecError(std::string(what) + ": " + e.what());
  }
  if (img.is_line || std::abs(img.center) + img.radius > 1.0 + 1e-12)
    throw SpecError(std::string(what) + " does not map the unit disc into itself");
}

OperatorSpec::OperatorSpec(RationalMap phi1, RationalMap phi2, AnalyticMap p, AnalyticMap q)
    : phi1_(std::move(phi1)), phi2_(std::move(phi2)), p_(std::move(p)), q_(std::move(q)) {
  check_disc_self_map(phi1_, "phi1");
  check_disc_self_map(phi2_, "phi2");
  if (same_map(phi1_, phi2_)) throw SpecError("phi1 and phi2 coincide: the segment [S_z] vanishes identically");
  if (p_.is_zero() && q_.is_zero()) throw SpecError("p and q are both zero");
}

bool OperatorSpec::is_simple_linear_polynomial() const noexcept {
  auto affine = [](const RationalMap& m) { return m.is_polynomial() && m.num().degree() <= 1; };
  return affine(phi1_) && affine(phi2_) && p_.is_rational() && q_.is_rational() &&
         p_.factor().is_polynomial() && q_.factor().is_polynomial();
}

SegmentValues segment(const OperatorSpec& spec, cplx z) {
  const cplx a = spec.phi1()(z);
  const cplx b = spec.phi2()(z);
  return {a, b, b - a};
}

WellDefinedPoint well_defined_at(const OperatorSpec& spec, cplx z) {
  const auto seg = segment(spec, z);
  const cplx p = spec.p()(z), q = spec.q()(z);
  const cplx top = p * seg.phi2z + q;
  const cplx bottom = p * seg.phi1z + q;
  if (std::abs(bottom) <= 1e-14 * std::max(1.0, std::abs(top)))
    throw ZeroDenominatorError("well_defined_at: p*phi1 + q vanishes");
  const cplx rho = top / bottom;
  const bool on_ray = rho.real() <= 0.0 && rho.imag() == 0.0;
  if (on_ray) return {false, -std::max(std::abs(rho), std::numeric_limits<double>::min()), rho};
  const double dist = rho.real() > 0.0 ? std::abs(rho) : std::abs(rho.imag());
  return {true, dist, rho};
}

KernelPair kernel(const OperatorSpec& spec, double t, cplx z) {
  const cplx f1 = spec.phi1()(z), f2 = spec.phi2()(z);
  const cplx f1d = spec.phi1().derivative(z), f2d = spec.phi2().derivative(z);
  const cplx p = spec.p()(z), q = spec.q()(z);
  const cplx pd = spec.p().derivative(z), qd = spec.q().derivative(z);
  const cplx s = f2 - f1, sd = f2d - f1d;

  const cplx num = f1 * f2 * p + (f1 + t * s) * q;
  const cplx den = (f2 - t * s) * p + q;
  if (std::abs(den) <= 1e-14 * std::max(1.0, std::abs(num)))
    throw KernelPoleError("kernel: shared denominator (phi2 - t[S])p + q vanishes");
  const cplx num_d = (f1d * f2 + f1 * f2d) * p + f1 * f2 * pd + (f1d + t * sd) * q + (f1 + t * s) * qd;
  const cplx den_d = (f2d - t * sd) * p + (f2 - t * s) * pd + qd;

  KernelPair k;
  k.w = 1.0 / den;
  k.gamma = num * k.w;
  k.gamma_dt = s * (p * f1 + q) * (p * f2 + q) * k.w * k.w;
  k.gamma_dz = (num_d * den - num * den_d) * k.w * k.w;
  k.w_dz = -den_d * k.w * k.w;
  return k;
}

}  // namespace wco
