#include "wco/matrix.hpp"

#include <cmath>

#include "wco/errors.hpp"

namespace wco {

namespace {

void validate_pair(double p0, double q0, double lo, double hi, const char* what) {
  if (!(lo >= -1.0 && lo < hi && hi <= 1.0)) throw DomainError(std::string(what) + ": need -1 <= lo < hi <= 1");
  if (q0 == 0.0) throw DomainError(std::string(what) + ": q0 must be nonzero");
  for (double s : {1.0, -1.0})
    if ((q0 + s * p0 * hi) * (q0 + s * p0 * lo) < 0.0)
      throw DomainError(std::string(what) + ": p0*zeta + q0 changes sign on the interval");
}

}  // namespace

void validate(const M1Params& p) { validate_pair(p.p0, p.q0, p.x1, p.x2, "M1"); }
void validate(const M2Params& p) { validate_pair(p.p0, p.q0, p.lambda1, p.lambda2, "M2"); }

double divided_power_difference(double a, double b, int m) {
  if (m < 1) throw DomainError("divided_power_difference: m must be positive");
  if (std::abs(b - a) < 0.1) {
    double sum = 0.0;
    for (int j = 0; j < m; ++j) sum += std::pow(b, j) * std::pow(a, m - 1 - j);
    return sum / m;
  }
  return (std::pow(b, m) - std::pow(a, m)) / ((b - a) * m);
}

double m1_entry(const M1Params& p, int n, int k) {
  if (n < 0 || k < 0) throw DimensionError("m1_entry: negative index");
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * std::pow(p.p0, n) / std::pow(p.q0, n + 1) * divided_power_difference(p.x1, p.x2, n + k + 1);
}

double m2_entry(const M2Params& p, int n, int k) {
  if (n < 0 || k < 0) throw DimensionError("m2_entry: negative index");
  if (n < k) return 0.0;
  const double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
  return sign / p.q0 * std::pow(p.p0 / p.q0, n - k) * divided_power_difference(p.lambda1, p.lambda2, n + 1);
}

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix truncate(const MatrixFamily& family, int n) {
  if (n < 1) throw DimensionError("truncate: N must be at least 1");
  DenseMatrix m(n, n);
  std::visit(
      [&](const auto& params) {
        validate(params);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            if constexpr (std::is_same_v<std::decay_t<decltype(params)>, M1Params>)
              m(i, j) = m1_entry(params, i, j);
            else
              m(i, j) = m2_entry(params, i, j);
          }
      },
      family);
  return m;
}

std::vector<cplx> apply_matrix(const DenseMatrix& m, const std::vector<cplx>& v) {
  if (static_cast<int>(v.size()) != m.cols) throw DimensionError("apply_matrix: vector length differs from column count");
  std::vector<cplx> out(m.rows, 0.0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out[i] += m(i, j) * v[j];
  return out;
}

SpectralNorm spectral_norm(const DenseMatrix& t, int max_iterations, double tol, bool allow_unconverged) {
  if (t.rows < 1 || t.cols < 1) throw DimensionError("spectral_norm: empty matrix");
  std::vector<double> v(t.cols, 1.0 / std::sqrt(static_cast<double>(t.cols)));
  std::vector<double> u(t.rows), w(t.cols);
  SpectralNorm res;
  double prev = -1.0;
  for (int it = 1; it <= max_iterations; ++it) {
    for (int i = 0; i < t.rows; ++i) {
      double s = 0.0;
      for (int j = 0; j < t.cols; ++j) s += t(i, j) * v[j];
      u[i] = s;
    }
    double sigma2 = 0.0;
    for (double x : u) sigma2 += x * x;
    std::fill(w.begin(), w.end(), 0.0);
    for (int i = 0; i < t.rows; ++i)
      for (int j = 0; j < t.cols; ++j) w[j] += t(i, j) * u[i];
    double wn = 0.0;
    for (double x : w) wn += x * x;
    wn = std::sqrt(wn);
    if (!std::isfinite(sigma2)) throw NonConvergenceError("spectral_norm: non-finite iterate");
    res.iterations = it;
    res.value = std::sqrt(sigma2);
    if (wn == 0.0) {
      res.converged = true;
      return res;
    }
    for (int j = 0; j < t.cols; ++j) v[j] = w[j] / wn;
    if (prev >= 0.0 && std::abs(sigma2 - prev) <= tol * sigma2) {
      res.converged = true;
      return res;
    }
    prev = sigma2;
  }
  if (!allow_unconverged) throw NonConvergenceError("spectral_norm: power iteration did not converge");
  return res;
}

}  // namespace wco
