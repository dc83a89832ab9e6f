#pragma once

#include "wco/rational_map.hpp"

namespace wco {

/// An evaluatable analytic (or meromorphic) map: a rational factor, optionally
/// multiplied by the builtin exp(z). This covers every rational p, q and the
/// transcendental generator example p(z) = e^z together with the q derived from it.
class AnalyticMap {
public:
  AnalyticMap() = default;
  AnalyticMap(RationalMap factor, bool times_exp = false) : factor_(std::move(factor)), exp_(times_exp) {}
  AnalyticMap(Polynomial p) : factor_(std::move(p)) {}

  static AnalyticMap exp() { return AnalyticMap(RationalMap::constant(1.0), true); }
  static AnalyticMap constant(double c) { return AnalyticMap(RationalMap::constant(c)); }

  const RationalMap& factor() const noexcept { return factor_; }
  bool has_exp() const noexcept { return exp_; }
  bool is_rational() const noexcept { return !exp_; }
  bool is_zero() const noexcept { return factor_.is_zero(); }
  /// Throws ShapeError unless the map is rational.
  const RationalMap& rational() const;

  cplx value(cplx z) const;
  cplx derivative(cplx z) const;
  cplx operator()(cplx z) const { return value(z); }

  /// Multiplication by a rational map keeps the exp flag.
  friend AnalyticMap operator*(const RationalMap& r, const AnalyticMap& a) {
    return AnalyticMap(r * a.factor_, a.exp_);
  }

private:
  RationalMap factor_;
  bool exp_ = false;
};

}  // namespace wco
