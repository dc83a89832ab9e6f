#include "wco/coeff_vectors.hpp"

#include <algorithm>

#include "wco/errors.hpp"

namespace wco {

namespace {

std::vector<double> shifted(const Polynomial& p, std::size_t len, int shift) {
  std::vector<double> v(len, 0.0);
  for (int k = 0; k <= p.degree(); ++k)
    if (k + shift < static_cast<int>(len)) v[k + shift] = p.coeff(k);
  return v;
}

void axpy(std::vector<double>& acc, double s, const std::vector<double>& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += s * v[i];
}

std::vector<double> affine_at(const std::vector<double>& slope, const std::vector<double>& cst, double t) {
  std::vector<double> out(slope.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = slope[i] * t + cst[i];
  return out;
}

}  // namespace

std::vector<double> GammaCoeffVectors::a_at(double t) const { return affine_at(a_slope, a_const, t); }
std::vector<double> GammaCoeffVectors::b_at(double t) const { return affine_at(b_slope, b_const, t); }

GammaCoeffVectors gamma_coeff_vector_pattern(const OperatorSpec& spec) {
  if (!spec.is_simple_linear_polynomial())
    throw ShapeError("gamma_coeff_vectors: needs phi_i = x_i + lambda_i z and polynomial p, q");
  const Polynomial f1 = spec.phi1().as_polynomial(), f2 = spec.phi2().as_polynomial();
  const double x1 = f1.coeff(0), l1 = f1.coeff(1), x2 = f2.coeff(0), l2 = f2.coeff(1);
  const Polynomial p = spec.p().factor().as_polynomial(), q = spec.q().factor().as_polynomial();
  const int n = std::max({p.degree(), q.degree(), 0});
  const std::size_t len = static_cast<std::size_t>(n) + 3;

  const auto P = shifted(p, len, 0), P1 = shifted(p, len, 1), P2 = shifted(p, len, 2);
  const auto Q = shifted(q, len, 0), Q1 = shifted(q, len, 1);

  GammaCoeffVectors v;
  v.a_slope.assign(len, 0.0);
  v.a_const.assign(len, 0.0);
  v.b_slope.assign(len, 0.0);
  v.b_const.assign(len, 0.0);

  axpy(v.a_slope, x2 - x1, Q);
  axpy(v.a_slope, l2 - l1, Q1);

  axpy(v.a_const, x1 * x2, P);
  axpy(v.a_const, x1, Q);
  axpy(v.a_const, x1 * l2 + x2 * l1, P1);
  axpy(v.a_const, l1, Q1);
  axpy(v.a_const, l1 * l2, P2);

  axpy(v.b_slope, -(x2 - x1), P);
  axpy(v.b_slope, -(l2 - l1), P1);

  axpy(v.b_const, x2, P);
  axpy(v.b_const, 1.0, Q);
  axpy(v.b_const, l2, P1);
  return v;
}

GammaCoeffs gamma_coeff_vectors(const OperatorSpec& spec, double t) {
  const auto v = gamma_coeff_vector_pattern(spec);
  return {v.a_at(t), v.b_at(t)};
}

const char* to_string(GammaCase c) {
  switch (c) {
    case GammaCase::case1: return "case1";
    case GammaCase::case2: return "case2";
    case GammaCase::case3: return "case3";
    case GammaCase::general: return "general";
  }
  return "general";
}

GammaCase classify_gamma(const OperatorSpec& spec) {
  if (!spec.is_simple_linear_polynomial()) return GammaCase::general;
  const Polynomial p = spec.p().factor().as_polynomial(), q = spec.q().factor().as_polynomial();
  if (p.degree() > 1 || q.degree() > 1) return GammaCase::general;
  const double l1 = spec.phi1().as_polynomial().coeff(1), l2 = spec.phi2().as_polynomial().coeff(1);
  if (l1 == 0.0 && l2 == 0.0) return GammaCase::case1;
  if (p.is_zero() && q.degree() <= 0) return GammaCase::case3;
  if (l1 == 0.0 && p.degree() <= 0 && q.degree() <= 0) return GammaCase::case2;
  return GammaCase::general;
}

}  // namespace wco
