#pragma once

#include "wco/polynomial.hpp"

namespace wco {

/// Ratio of two real polynomials, normalized on construction: common roots
/// are cancelled (tolerance 1e-12) and the denominator is scaled to have
/// leading coefficient 1.
class RationalMap {
public:
  static constexpr double kCancelTol = 1e-12;

  RationalMap() : num_{}, den_{1.0} {}
  RationalMap(Polynomial num, Polynomial den);
  /// Implicit on purpose: a polynomial is a rational map over 1.
  RationalMap(Polynomial num) : RationalMap(std::move(num), Polynomial{1.0}) {}

  static RationalMap constant(double c) { return RationalMap(Polynomial::constant(c)); }
  static RationalMap identity() { return RationalMap(Polynomial::identity()); }
  /// (a z + b) / (c z + d)
  static RationalMap mobius(double a, double b, double c, double d);

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }

  bool is_polynomial() const noexcept { return den_.degree() == 0; }
  bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  /// deg num <= 1 and deg den <= 1.
  bool is_mobius_shape() const noexcept { return num_.degree() <= 1 && den_.degree() <= 1; }
  /// Polynomial part when the denominator is constant.
  Polynomial as_polynomial() const;

  /// Throws PoleError when |den(z)| < 1e-14 max(1, |num(z)|).
  cplx operator()(cplx z) const;
  cplx derivative(cplx z) const;

  RationalMap operator-() const;
  friend RationalMap operator+(const RationalMap& a, const RationalMap& b);
  friend RationalMap operator-(const RationalMap& a, const RationalMap& b);
  friend RationalMap operator*(const RationalMap& a, const RationalMap& b);
  friend RationalMap operator/(const RationalMap& a, const RationalMap& b);
  friend RationalMap operator*(double s, const RationalMap& a);


private:
  struct Raw {};
  RationalMap(Polynomial num, Polynomial den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

/// True when a·den_b − b·den_a vanishes coefficient-wise to rel_tol.
bool same_map(const RationalMap& a, const RationalMap& b, double rel_tol = 1e-12);

cplx rational_eval(const RationalMap& r, cplx z);
cplx rational_derivative(const RationalMap& r, cplx z);

}  // namespace wco
