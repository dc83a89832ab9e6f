#pragma once

#include "wco/matrix.hpp"
#include "wco/operator_spec.hpp"

namespace wco {

enum class SectionMethod {
  series,   // power-series arithmetic in z at each quadrature node in t
  sampled,  // coefficients of I(e_k) extracted from point samples on |z| = r
};

struct SectionOptions {
  SectionMethod method = SectionMethod::series;
  double r = 0.6;   // sampled: extraction radius
  int m = 512;      // sampled: sample count (power of two, >= 4N)
  double tol = 1e-13;
  int max_levels = 12;
  bool check_certificates = true;
};

struct FiniteSection {
  DenseMatrix matrix;
  bool converged = true;
  bool ill_conditioned = false;  // sampled route: r^n < 1e-12
  double max_imag = 0.0;         // largest discarded imaginary part
};

/// N×N section of I in the weighted basis e_k = z^k / sqrt(w_k), w_0 = 1,
/// w_k = k^(1−α): column k is sqrt(w_n) · coeff_n(I(e_k)). Its spectral norm
/// is a lower bound for ‖I‖ on D_α. Throws ConditionError when the
/// well-defined or exact self-map certificate fails on a coarse grid.
FiniteSection finite_section(const OperatorSpec& spec, double alpha, int n, const SectionOptions& opts = {});

}  // namespace wco
