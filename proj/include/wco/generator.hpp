#pragma once

#include "wco/certificates.hpp"
#include "wco/operator_spec.hpp"

namespace wco {

/// (φ1, φ2, p, ω) with ω a self-map of the disc; q is then manufactured so
/// that sqrt(ρ) = (1 + ω)/(1 − ω), which makes the operator well defined.
class GeneratorInput {
public:
  /// Throws SpecError if φ1/φ2 are not disc self-maps or ω does not map the
  /// disc into itself (Möbius image, or boundary sampling with margin 1e-9).
  GeneratorInput(RationalMap phi1, RationalMap phi2, AnalyticMap p, RationalMap omega);

  const RationalMap& phi1() const noexcept { return phi1_; }
  const RationalMap& phi2() const noexcept { return phi2_; }
  const AnalyticMap& p() const noexcept { return p_; }
  const RationalMap& omega() const noexcept { return omega_; }

private:
  RationalMap phi1_, phi2_;
  AnalyticMap p_;
  RationalMap omega_;
};

/// q = ([S](1 − ω)² / (4ω) − φ1) p, simplified as a rational map (times e^z
/// when p carries it). Throws ZeroOmegaError when ω ≡ 0.
AnalyticMap derive_q(const GeneratorInput& gin);

OperatorSpec generated_spec(const GeneratorInput& gin);

/// γ = φ1 + [S]ψ with ψ = t(1 − ω)² / (1 + (2 − 4t)ω + ω²), and the weight w
/// from the derived q. Throws ZeroOmegaError when |ω(z)| < 1e-12 and
/// KernelPoleError when the ψ denominator vanishes.
KernelPair generated_kernel(const GeneratorInput& gin, double t, cplx z);

/// Checks sqrt(ρ) = (1 + ω)/(1 − ω) to 1e-10 per node and runs the sampled
/// self-map condition on the generated spec; pass requires both.
Certificate verify_generated(const GeneratorInput& gin, const DiscGrid& zgrid, const std::vector<double>& tgrid);

}  // namespace wco
