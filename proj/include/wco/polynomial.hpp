#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace wco {

using cplx = std::complex<double>;

/// Real polynomial stored in ascending degree: coeffs()[k] multiplies z^k.
/// Trailing zeros are trimmed on construction; the empty vector is zero.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);
  Polynomial(std::initializer_list<double> coeffs);

  static Polynomial constant(double c) { return Polynomial({c}); }
  static Polynomial identity() { return Polynomial({0.0, 1.0}); }

  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  double coeff(int k) const noexcept {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0.0;
  }
  double leading() const noexcept { return coeffs_.empty() ? 0.0 : coeffs_.back(); }
  double max_abs_coeff() const noexcept;

  cplx operator()(cplx z) const noexcept;
  double operator()(double x) const noexcept;
  /// Σ|c_k| |z|^k, the natural scale for rounding error of a Horner sum.
  double magnitude_bound(double r) const noexcept;

  Polynomial derivative() const;
  /// Drops trailing coefficients with |c| <= rel_tol * max|c|.
  Polynomial trimmed(double rel_tol) const;

  /// Complex roots via companion-matrix eigenvalues.
  std::vector<cplx> roots() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(double s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void trim();
  std::vector<double> coeffs_;
};

/// Long division: returns (quotient, remainder) with deg remainder < deg divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

inline cplx poly_eval(const Polynomial& p, cplx z) { return p(z); }

}  // namespace wco
