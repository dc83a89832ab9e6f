#include "wco/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wco/circle.hpp"
#include "wco/errors.hpp"

namespace wco {

namespace {

void check_omega(const RationalMap& omega) {
  if (omega.is_constant()) {
    if (!(std::abs(omega.num().coeff(0) / omega.den().coeff(0)) < 1.0))
      throw SpecError("omega is a constant outside the open disc");
    return;
  }
  if (omega.is_mobius_shape()) {
    Circle img;
    try {
      img = mobius_image_of_unit_disc(omega);
    } catch (const Error& e) {
      throw SpecError(std::string("omega: ") + e.what());
    }
    if (img.is_line || std::abs(img.center) + img.radius > 1.0 + 1e-12)
      throw SpecError("omega does not map the unit disc into itself");
    return;
  }
  for (const cplx r : omega.den().roots())
    if (std::abs(r) <= 1.0 + 1e-9) throw SpecError("omega has a pole in the closed disc");
  constexpr int kSamples = 4096;
  for (int j = 0; j < kSamples; ++j) {
    const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * j / kSamples);
    if (std::abs(omega(z)) > 1.0 - 1e-9) throw SpecError("omega does not map the unit circle into the disc");
  }
}

}  // namespace

GeneratorInput::GeneratorInput(RationalMap phi1, RationalMap phi2, AnalyticMap p, RationalMap omega)
    : phi1_(std::move(phi1)), phi2_(std::move(phi2)), p_(std::move(p)), omega_(std::move(omega)) {
  check_disc_self_map(phi1_, "phi1");
  check_disc_self_map(phi2_, "phi2");
  if (same_map(phi1_, phi2_)) throw SpecError("phi1 and phi2 coincide");
  if (p_.is_zero()) throw SpecError("p must not vanish identically");
  check_omega(omega_);
}

AnalyticMap derive_q(const GeneratorInput& gin) {
  if (gin.omega().is_zero()) throw ZeroOmegaError("derive_q: omega vanishes identically");
  const RationalMap one = RationalMap::constant(1.0);
  const RationalMap s = gin.phi2() - gin.phi1();
  const RationalMap u = one - gin.omega();
  const RationalMap factor = s * u * u / (4.0 * gin.omega()) - gin.phi1();
  return factor * gin.p();
}

OperatorSpec generated_spec(const GeneratorInput& gin) {
  return OperatorSpec(gin.phi1(), gin.phi2(), gin.p(), derive_q(gin));
}

KernelPair generated_kernel(const GeneratorInput& gin, double t, cplx z) {
  const cplx w = gin.omega()(z);
  if (std::abs(w) < 1e-12) throw ZeroOmegaError("generated_kernel: omega(z) is zero");
  const cplx wd = gin.omega().derivative(z);
  const cplx f1 = gin.phi1()(z), f2 = gin.phi2()(z);
  const cplx f1d = gin.phi1().derivative(z), f2d = gin.phi2().derivative(z);
  const cplx s = f2 - f1, sd = f2d - f1d;

  const cplx u = 1.0 - w;
  const cplx den = 1.0 + (2.0 - 4.0 * t) * w + w * w;
  if (std::abs(den) <= 1e-14 * std::max(1.0, std::norm(u)))
    throw KernelPoleError("generated_kernel: psi denominator vanishes");
  const cplx psi = t * u * u / den;
  const cplx psi_dz = t * (-2.0 * u * wd * den - u * u * ((2.0 - 4.0 * t) * wd + 2.0 * w * wd)) / (den * den);
  const cplx psi_dt = (u * u * den - t * u * u * (-4.0 * w)) / (den * den);

  // w = 1/((φ2 − t[S])p + q) with q from the generator:
  // (φ2 − t[S])p + q = p[S]((1 − ω)²/(4ω) + 1 − t).
  const cplx p = gin.p()(z), pd = gin.p().derivative(z);
  const cplx g = u * u / (4.0 * w) + 1.0 - t;
  const cplx g_dz = (-2.0 * u * wd * 4.0 * w - u * u * 4.0 * wd) / (16.0 * w * w);
  const cplx d = p * s * g;
  if (std::abs(d) == 0.0) throw KernelPoleError("generated_kernel: weight denominator vanishes");
  const cplx d_dz = pd * s * g + p * sd * g + p * s * g_dz;

  KernelPair k;
  k.gamma = f1 + s * psi;
  k.gamma_dz = f1d + sd * psi + s * psi_dz;
  k.gamma_dt = s * psi_dt;
  k.w = 1.0 / d;
  k.w_dz = -d_dz / (d * d);
  return k;
}

Certificate verify_generated(const GeneratorInput& gin, const DiscGrid& zgrid, const std::vector<double>& tgrid) {
  const OperatorSpec spec = generated_spec(gin);
  // Zeros of ω are poles of q (or removable ones), and where pφ1 + q vanishes
  // ρ and γ are 0/0; at all of these the identity only holds as a limit, so
  // such nodes are excluded rather than evaluated.
  const auto& qden = spec.q().factor().den();
  std::vector<cplx> qpoles = qden.degree() > 0 ? qden.roots() : std::vector<cplx>{};
  DiscGrid kept = zgrid;
  kept.points.clear();
  for (const cplx z : zgrid.points) {
    bool skip = std::abs(gin.omega()(z)) < 1e-12;
    for (const cplx r : qpoles) skip = skip || std::abs(z - r) < 1e-9;
    if (!skip) {
      const cplx p = spec.p()(z), q = spec.q()(z), f1 = spec.phi1()(z);
      skip = std::abs(p * f1 + q) <= 1e-12 * std::max({1.0, std::abs(p), std::abs(q)});
    }
    if (!skip) kept.points.push_back(z);
  }
  if (kept.points.empty()) throw DomainError("verify_generated: no admissible grid nodes");
  Certificate cert;
  cert.kind = CertificateKind::generated;
  cert.grid = std::to_string(kept.points.size()) + " z-nodes (" +
              std::to_string(zgrid.points.size() - kept.points.size()) + " excluded as removable), " +
              std::to_string(tgrid.size()) + " t-nodes";
  for (const cplx z : kept.points) {
    try {
      const auto wd = well_defined_at(spec, z);
      const cplx w = gin.omega()(z);
      const cplx target = (1.0 + w) / (1.0 - w);
      const double err = std::abs(std::sqrt(wd.rho) - target);
      const double margin = 1e-10 * std::max(1.0, std::abs(target)) - err;
      cert.record({std::nullopt, z, margin, margin >= 0.0 ? "" : "sqrt(rho) identity fails"}, margin >= 0.0);
    } catch (const Error& e) {
      cert.record({std::nullopt, z, -std::numeric_limits<double>::max(), e.what()}, false);
    }
  }
  const Certificate sm = selfmap_condition_sampled(spec, tgrid, kept);
  cert.nodes += sm.nodes;
  cert.failures += sm.failures;
  cert.min_margin = std::min(cert.min_margin, sm.min_margin);
  if (!sm.pass) {
    cert.pass = false;
    for (auto w : sm.witnesses) {
      w.note = "self-map condition fails";
      cert.witnesses.push_back(w);
    }
    std::sort(cert.witnesses.begin(), cert.witnesses.end(),
              [](const Witness& a, const Witness& b) { return a.margin < b.margin; });
    if (cert.witnesses.size() > Certificate::kMaxWitnesses) cert.witnesses.resize(Certificate::kMaxWitnesses);
  }
  return cert;
}

}  // namespace wco
