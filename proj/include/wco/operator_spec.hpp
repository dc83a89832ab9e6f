#pragma once

#include "wco/analytic_map.hpp"

namespace wco {

/// The quadruple (φ1, φ2, p, q) defining
///   I(f)(z) = 1/[S_z] ∫_{S_z} f(ζ) / (p(z) ζ + q(z)) dζ,   [S_z] = φ2(z) − φ1(z).
/// φ1, φ2 are linear fractional self-maps of the closed disc with real
/// coefficients (constants allowed) and φ1 ≠ φ2.
class OperatorSpec {
public:
  /// Validates the invariants; throws SpecError on violation.
  OperatorSpec(RationalMap phi1, RationalMap phi2, AnalyticMap p, AnalyticMap q);

  const RationalMap& phi1() const noexcept { return phi1_; }
  const RationalMap& phi2() const noexcept { return phi2_; }
  const AnalyticMap& p() const noexcept { return p_; }
  const AnalyticMap& q() const noexcept { return q_; }

  /// True when φ1, φ2 are affine (x + λz) and p, q are polynomials.
  bool is_simple_linear_polynomial() const noexcept;

private:
  RationalMap phi1_, phi2_;
  AnalyticMap p_, q_;
};

/// Throws SpecError unless m is a real linear fractional map (or constant)
/// sending the closed unit disc into itself (|centre| + radius <= 1 + 1e-12).
void check_disc_self_map(const RationalMap& m, const char* what);

struct SegmentValues {
  cplx phi1z;
  cplx phi2z;
  cplx length;  // [S_z] = φ2(z) − φ1(z)
};

SegmentValues segment(const OperatorSpec& spec, cplx z);

struct WellDefinedPoint {
  bool pass;
  double margin;  // distance of ρ to (−∞, 0]; negative on the ray
  cplx rho;       // (pφ2 + q) / (pφ1 + q)
};

/// Condition Re sqrt(ρ(z)) > 0 with the principal branch, i.e. ρ(z) ∉ (−∞, 0].
/// Throws ZeroDenominatorError when pφ1 + q vanishes.
WellDefinedPoint well_defined_at(const OperatorSpec& spec, cplx z);

/// Values of the weighted-composition kernel at (t, z):
///   w = 1 / ((φ2 − t[S])p + q),  γ = (φ1φ2 p + (φ1 + t[S]) q) w.
struct KernelPair {
  cplx w;
  cplx gamma;
  cplx gamma_dt;
  cplx gamma_dz;
  cplx w_dz;
};

/// Throws KernelPoleError when the shared denominator vanishes.
KernelPair kernel(const OperatorSpec& spec, double t, cplx z);

}  // namespace wco
