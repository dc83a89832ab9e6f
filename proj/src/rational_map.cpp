#include "wco/rational_map.hpp"

#include <algorithm>
#include <cmath>

#include "wco/errors.hpp"

namespace wco {

RationalMap::RationalMap(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

RationalMap RationalMap::mobius(double a, double b, double c, double d) {
  return RationalMap(Polynomial({b, a}), Polynomial({d, c}));
}

namespace {

bool shares_root(const Polynomial& p, cplx r) {
  const double scale = std::max(p.magnitude_bound(std::abs(r)), 1e-300);
  return std::abs(p(r)) <= RationalMap::kCancelTol * scale;
}

// Roots of a multiple factor come out spread by ~eps^(1/m); the mean of a
// cluster is accurate again, so cancellation is tested at cluster means.
std::vector<cplx> clustered_roots(const Polynomial& p) {
  std::vector<cplx> roots = p.roots();
  std::vector<cplx> out;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    cplx sum = roots[i];
    int count = 1;
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (!used[j] && std::abs(roots[j] - roots[i]) <= 1e-4 * std::max(1.0, std::abs(roots[i]))) {
        used[j] = true;
        sum += roots[j];
        ++count;
      }
    out.push_back(sum / static_cast<double>(count));
    if (count > 1) out.push_back(roots[i]);
  }
  return out;
}

// num/den and the reduced pair describe the same map (cross products agree).
bool equivalent(const Polynomial& n1, const Polynomial& d1, const Polynomial& n2, const Polynomial& d2) {
  const Polynomial diff = n1 * d2 - n2 * d1;
  const double scale = std::max((n1 * d2).max_abs_coeff(), 1e-300);
  return diff.max_abs_coeff() <= 1e-10 * scale;
}

Polynomial factor_for(cplx r) {
  if (std::abs(r.imag()) <= 1e-12 * std::max(1.0, std::abs(r))) return Polynomial({-r.real(), 1.0});
  return Polynomial({std::norm(r), -2.0 * r.real(), 1.0});
}

}  // namespace

void RationalMap::normalize() {
  const double dmax = den_.max_abs_coeff();
  den_ = den_.trimmed(1e-15);
  if (den_.is_zero() || dmax == 0.0) throw DomainError("rational map with zero denominator");
  num_ = num_.trimmed(1e-15);
  if (num_.is_zero()) {
    den_ = Polynomial{1.0};
    return;
  }
  bool again = true;
  while (again && den_.degree() > 0 && num_.degree() > 0) {
    again = false;
    for (const cplx& r : clustered_roots(den_)) {
      if (r.imag() < -1e-12 * std::max(1.0, std::abs(r))) continue;  // handled with its conjugate
      if (!shares_root(num_, r)) continue;
      const Polynomial f = factor_for(r);
      if (f.degree() > num_.degree() || f.degree() > den_.degree()) continue;
      Polynomial n = divmod(num_, f).first, d = divmod(den_, f).first;
      if (!equivalent(num_, den_, n, d)) continue;
      num_ = std::move(n);
      den_ = std::move(d);
      again = true;
      break;
    }
  }
  const double lead = den_.leading();
  num_ *= 1.0 / lead;
  den_ *= 1.0 / lead;
}

Polynomial RationalMap::as_polynomial() const {
  if (!is_polynomial()) throw ShapeError("rational map is not a polynomial");
  return num_ * (1.0 / den_.coeff(0));
}

cplx RationalMap::operator()(cplx z) const {
  const cplx n = num_(z);
  const cplx d = den_(z);
  if (std::abs(d) < 1e-14 * std::max(1.0, std::abs(n))) throw PoleError("evaluation at a pole of a rational map");
  return n / d;
}

cplx RationalMap::derivative(cplx z) const {
  const cplx n = num_(z);
  const cplx d = den_(z);
  if (std::abs(d) < 1e-14 * std::max(1.0, std::abs(n))) throw PoleError("derivative at a pole of a rational map");
  const cplx dn = num_.derivative()(z);
  const cplx dd = den_.derivative()(z);
  return (dn * d - n * dd) / (d * d);
}

RationalMap RationalMap::operator-() const { return RationalMap(-num_, den_, Raw{}); }

RationalMap operator+(const RationalMap& a, const RationalMap& b) {
  if (a.den_ == b.den_) return RationalMap(a.num_ + b.num_, a.den_);
  return RationalMap(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalMap operator-(const RationalMap& a, const RationalMap& b) { return a + (-b); }

RationalMap operator*(const RationalMap& a, const RationalMap& b) {
  return RationalMap(a.num_ * b.num_, a.den_ * b.den_);
}

RationalMap operator/(const RationalMap& a, const RationalMap& b) {
  if (b.is_zero()) throw DomainError("division by the zero rational map");
  return RationalMap(a.num_ * b.den_, a.den_ * b.num_);
}

RationalMap operator*(double s, const RationalMap& a) { return RationalMap(a.num_ * s, a.den_); }

bool same_map(const RationalMap& a, const RationalMap& b, double rel_tol) {
  const Polynomial lhs = a.num() * b.den();
  const Polynomial rhs = b.num() * a.den();
  const double scale = std::max({lhs.max_abs_coeff(), rhs.max_abs_coeff(), 1e-300});
  const Polynomial diff = lhs - rhs;
  return diff.max_abs_coeff() <= rel_tol * scale;
}

cplx rational_eval(const RationalMap& r, cplx z) { return r(z); }
cplx rational_derivative(const RationalMap& r, cplx z) { return r.derivative(z); }

}  // namespace wco
