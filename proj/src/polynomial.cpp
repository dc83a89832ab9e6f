#include "wco/polynomial.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "wco/errors.hpp"

namespace wco {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

cplx Polynomial::operator()(cplx z) const noexcept {
  cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double Polynomial::operator()(double x) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::magnitude_bound(double r) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::trimmed(double rel_tol) const {
  const double cut = rel_tol * max_abs_coeff();
  std::vector<double> c = coeffs_;
  while (!c.empty() && std::abs(c.back()) <= cut) c.pop_back();
  return Polynomial(std::move(c));
}

std::vector<cplx> Polynomial::roots() const {
  const int n = degree();
  if (n <= 0) return {};
  if (n == 1) return {cplx(-coeffs_[0] / coeffs_[1], 0.0)};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs_[i] / coeffs_[n];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  const auto& ev = solver.eigenvalues();
  std::vector<cplx> out(ev.data(), ev.data() + ev.size());
  // One Newton polish step per root.
  const Polynomial d = derivative();
  for (auto& r : out) {
    const cplx dv = d(r);
    if (std::abs(dv) > 0.0) {
      const cplx step = (*this)(r) / dv;
      if (std::isfinite(step.real()) && std::abs(step) < 1e-6 * std::max(1.0, std::abs(r))) r -= step;
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (double& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  const int dn = den.degree();
  std::vector<double> rem = num.coeffs();
  if (num.degree() < dn) return {Polynomial{}, num};
  std::vector<double> quot(num.degree() - dn + 1, 0.0);
  for (int k = num.degree() - dn; k >= 0; --k) {
    const double q = rem[k + dn] / den.leading();
    quot[k] = q;
    for (int j = 0; j <= dn; ++j) rem[k + j] -= q * den.coeff(j);
    rem[k + dn] = 0.0;
  }
  rem.resize(dn);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

}  // namespace wco
