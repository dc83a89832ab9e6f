#pragma once

#include <vector>

#include "wco/operator_spec.hpp"

namespace wco {

/// Coefficient vectors of γ(t, z) = Σ a_n(t) z^n / Σ b_n(t) z^n for affine
/// φ_i(z) = x_i + λ_i z and polynomial p, q of degree <= N. Every entry is
/// affine in t: a_n(t) = a_slope[n] t + a_const[n]. Vectors have length N + 3
/// and the top entry of b is zero.
struct GammaCoeffVectors {
  std::vector<double> a_slope, a_const, b_slope, b_const;

  std::vector<double> a_at(double t) const;
  std::vector<double> b_at(double t) const;
};

/// Throws ShapeError unless the spec is simple-linear with polynomial p, q.
GammaCoeffVectors gamma_coeff_vector_pattern(const OperatorSpec& spec);

struct GammaCoeffs {
  std::vector<double> a;
  std::vector<double> b;
};

GammaCoeffs gamma_coeff_vectors(const OperatorSpec& spec, double t);

enum class GammaCase { case1, case2, case3, general };

const char* to_string(GammaCase c);

/// Linear fractional classes of γ for simple-linear φ_i and deg p, q <= 1:
/// case 1: λ1 = λ2 = 0; case 3: p = 0, q constant; case 2: λ1 = 0, p, q constant.
/// Case 3 is tested before case 2 since a spec with λ1 = 0, p = 0 fits both.
GammaCase classify_gamma(const OperatorSpec& spec);

}  // namespace wco
