#pragma once

#include <functional>

#include "wco/series.hpp"

namespace wco {

/// Weight of z^n in the D_α norm: 1 for n = 0, n^(1−α) otherwise.
double dirichlet_weight(std::size_t n, double alpha);

/// sqrt(|a0|² + Σ_{n>=1} n^(1−α) |a_n|²); throws DomainError unless 0 < α < 2.
double dirichlet_norm(const AnalyticSeries& f, double alpha);

/// M(α, r) = sqrt(1 + Σ_{n>=1} n^(α−1) r^(2n)), so that
/// |f(z)| <= M(α, |z|) ‖f‖_{D_α} by Cauchy–Schwarz. Summed until the
/// geometric tail bound drops below 1e-15 (relative).
double growth_majorant(double alpha, double r);

struct CoefficientExtraction {
  AnalyticSeries series;
  bool ill_conditioned = false;  // r^n < 1e-12 for some extracted n
};

/// a_n ≈ (1 / (M r^n)) Σ_m f(r e^{2πim/M}) e^{−2πinm/M}, n = 0..N.
/// M must be a power of two with M >= 4N.
CoefficientExtraction coeffs_from_samples(const std::function<cplx(cplx)>& sampler, double r, int n, int m);

}  // namespace wco
