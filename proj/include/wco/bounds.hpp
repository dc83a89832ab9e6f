#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "wco/certificates.hpp"
#include "wco/coeff_vectors.hpp"
#include "wco/quadrature.hpp"

namespace wco {

/// c·t + d, evaluated without cancellation near either endpoint.
struct Affine {
  double slope = 0.0;
  double offset = 0.0;

  double operator()(double t) const { return slope * t + offset; }
  double operator()(UnitPoint u) const { return u.t <= 0.5 ? slope * u.t + offset : (slope + offset) - slope * u.tc; }
  friend Affine operator+(Affine a, Affine b) { return {a.slope + b.slope, a.offset + b.offset}; }
  friend Affine operator-(Affine a, Affine b) { return {a.slope - b.slope, a.offset - b.offset}; }
};

/// γ(t, z) = (a1(t) z + a0(t)) / (b1(t) z + b0(t)).
struct LinearFractionalData {
  Affine a0, a1, b0, b1;
  GammaCase gamma_case = GammaCase::general;

  cplx gamma(double t, cplx z) const { return (a1(t) * z + a0(t)) / (b1(t) * z + b0(t)); }
};

/// Throws NotLinearFractionalError unless classify_gamma gives case 1, 2 or 3.
LinearFractionalData lf_data(const OperatorSpec& spec);

/// a1 b0 − a0 b1 (a quadratic in t).
double delta(const LinearFractionalData& lf, double t);
double delta(const LinearFractionalData& lf, UnitPoint u);

/// |b0| − |b1| without cancellation.
double b_gap(const LinearFractionalData& lf, UnitPoint u);

/// Three-branch weight of the boundedness criterion; throws DomainError if
/// |b1| >= |b0| or alpha is outside (0, 2).
double A_alpha(const LinearFractionalData& lf, double t, double alpha);
double A_alpha(const LinearFractionalData& lf, UnitPoint u, double alpha);

/// Checks |a0 − a1| <= |b0 − b1|, |a0 + a1| <= |b0 + b1| (tolerance 1e-12)
/// and |b1| < |b0| at each node. Witness notes name the failing bullet.
Certificate prop4_conditions(const LinearFractionalData& lf, const std::vector<double>& tgrid);
Certificate prop4_conditions(const LinearFractionalData& lf);  // 33 interior nodes

struct EndpointIntegral {
  std::optional<double> value;  // absent when divergent
  bool divergent = false;
  std::string divergent_end;  // "left" or "right"
  int levels = 0;
  double last_change = 0.0;
  bool converged = false;
};

struct EndpointIntegralConfig {
  double tol = 1e-10;
  int max_levels = 12;
  int first_shell = 40;  // shells [2^−(j+1), 2^−j] for j = first_shell ...
  int shells = 5;
  double ratio_threshold = 0.999;
  int sustained = 4;
};

/// ∫_0^1 f(t) dt for integrands with endpoint singularities, split at the
/// interior `breaks` (kinks or singular points): a dyadic-shell ratio test at
/// each piece end decides divergence, then tanh-sinh gives the value.
EndpointIntegral integrate_endpoint_singular(const std::function<double(UnitPoint)>& f,
                                             const EndpointIntegralConfig& cfg = {},
                                             std::vector<double> breaks = {});

struct BoundReport {
  double alpha = 0.0;
  std::array<bool, 3> conditions{};  // the three bullets, over the t-grid
  bool delta_integrable = false;
  std::optional<double> bound_value;  // present iff delta_integrable
  EndpointIntegral integral;
  std::optional<double> theorem3_value;
};

/// ∫_0^1 δ^(−α/2) A_α dt; evaluated only when the conditions pass.
BoundReport prop4_bound(const LinearFractionalData& lf, double alpha, const EndpointIntegralConfig& cfg = {});

struct AreaQuadConfig {
  std::vector<double> eps = {1e-2, 1e-3, 1e-4};
  int radial_nodes = 8;         // Gauss–Legendre nodes per radial panel
  int min_angles = 64;          // trapezoid angles, doubled until stable
  int max_angles = 1 << 15;
  double angle_tol = 1e-9;
  double divergence_ratio = 0.5;
  int sup_radii = 64;
  int sup_angles = 256;
};

struct Lemma2Terms {
  double area = 0.0;  // ∫_D |∂z w|² / |∂z γ|^α dm, dm = dA/π
  double sup = 0.0;   // sup_D |w|² / |∂z γ|^α
  std::vector<double> area_by_eps;
};

/// Polar quadrature over |z| <= 1 − ε with extrapolation in ε; throws
/// DivergentAreaIntegralError when the differences do not contract.
double area_term(const OperatorSpec& spec, double t, double alpha, const AreaQuadConfig& cfg,
                 std::vector<double>* by_eps = nullptr);
double sup_term(const OperatorSpec& spec, double t, double alpha, const AreaQuadConfig& cfg);
Lemma2Terms lemma2_bracket(const OperatorSpec& spec, double t, double alpha, const AreaQuadConfig& cfg = {});

struct Theorem3Result {
  std::optional<double> value;  // absent when divergent
  bool converged = false;
  int levels = 0;
  std::string note;
};

/// ∫_0^1 sqrt(area + sup) dt with the constant convention C = 1.
Theorem3Result theorem3_bound(const OperatorSpec& spec, double alpha, double tol = 1e-6, int max_levels = 6,
                              const AreaQuadConfig& cfg = {});

}  // namespace wco
