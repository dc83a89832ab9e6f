#pragma once

#include <variant>
#include <vector>

#include "wco/polynomial.hpp"

namespace wco {

/// Parameters of the Hankel-type family
///   c_{n,k} = (−1)^n p0^n / q0^{n+1} · (x2^{n+k+1} − x1^{n+k+1}) / ((x2 − x1)(n+k+1)).
struct M1Params {
  double p0, q0, x1, x2;
};

/// Parameters of the lower-triangular family
///   d_{n,k} = (−1)^{n−k} / q0 · (p0/q0)^{n−k} · (λ2^{n+1} − λ1^{n+1}) / ((λ2 − λ1)(n+1)),  n >= k.
struct M2Params {
  double p0, q0, lambda1, lambda2;
};

/// Throw DomainError unless −1 <= lo < hi <= 1 and (q0 ± p0·hi)(q0 ± p0·lo) >= 0
/// for both signs (the boundary value 0 admits the Hilbert and Cesàro choices).
void validate(const M1Params& p);
void validate(const M2Params& p);

/// (b^m − a^m) / ((b − a) m), via the sum Σ_{j<m} b^j a^{m−1−j} / m when |b − a| < 0.1.
double divided_power_difference(double a, double b, int m);

double m1_entry(const M1Params& params, int n, int k);
double m2_entry(const M2Params& params, int n, int k);

struct DenseMatrix {
  int rows = 0, cols = 0;
  std::vector<double> entries;  // row-major

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, 0.0) {}
  static DenseMatrix identity(int n);

  double& operator()(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }
};

using MatrixFamily = std::variant<M1Params, M2Params>;

/// N×N upper-left section. Throws DimensionError for N < 1.
DenseMatrix truncate(const MatrixFamily& family, int n);

/// Matrix–vector product; throws DimensionError on a size mismatch.
std::vector<cplx> apply_matrix(const DenseMatrix& m, const std::vector<cplx>& v);

struct SpectralNorm {
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Largest singular value by power iteration on TᵀT from the fixed start
/// vector (1, ..., 1)/sqrt(N). Throws NonConvergenceError after max_iterations
/// unless allow_unconverged is set.
SpectralNorm spectral_norm(const DenseMatrix& t, int max_iterations = 10000, double tol = 1e-10,
                           bool allow_unconverged = false);

}  // namespace wco
