#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "wco/errors.hpp"

namespace wco {

enum class EndpointMode { plain, double_exponential };

struct QuadratureConfig {
  int nodes = 64;
  double tol = 1e-11;
  int max_refinements = 12;
  EndpointMode endpoint_mode = EndpointMode::plain;
};

/// Validates a config; throws DomainError on nodes < 2 or non-positive tol.
void validate(const QuadratureConfig& cfg);

/// A point of (0,1) carried together with its exact complement 1 - t, so that
/// integrands can be evaluated without cancellation near t = 1.
struct UnitPoint {
  double t;
  double tc;
};

struct GaussLegendreRule {
  std::vector<double> x;  // nodes on [-1, 1]
  std::vector<double> w;
};

/// n-point Gauss–Legendre rule (cached, thread-safe).
const GaussLegendreRule& gauss_legendre(int n);

template <class T>
struct QuadResult {
  T value{};
  int refinements = 0;
  double last_change = 0.0;
  bool converged = false;
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(std::complex<double> v) { return std::abs(v); }
template <class V>
double magnitude(const std::vector<V>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, magnitude(x));
  return m;
}

inline double difference(double a, double b) { return std::abs(a - b); }
inline double difference(std::complex<double> a, std::complex<double> b) { return std::abs(a - b); }
template <class V>
double difference(const std::vector<V>& a, const std::vector<V>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, difference(a[i], b[i]));
  return m;
}

inline bool all_finite(double v) { return std::isfinite(v); }
inline bool all_finite(std::complex<double> v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }
template <class V>
bool all_finite(const std::vector<V>& v) {
  for (const auto& x : v)
    if (!all_finite(x)) return false;
  return true;
}

// acc += w * v, sizing acc from v on first use.
inline void axpy(double& acc, double w, double v) { acc += w * v; }
inline void axpy(std::complex<double>& acc, double w, std::complex<double> v) { acc += w * v; }
template <class V>
void axpy(std::vector<V>& acc, double w, const std::vector<V>& v) {
  if (acc.empty()) acc.assign(v.size(), V{});
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] += w * v[i];
}

template <class T>
T scaled(T v, double s) {
  if constexpr (std::is_arithmetic_v<T> || std::is_same_v<T, std::complex<double>>) {
    return v * s;
  } else {
    for (auto& x : v) x *= s;
    return v;
  }
}

}  // namespace detail

/// Composite Gauss–Legendre over [a, b] with 2^k equal panels, k = 0, 1, ...
/// until successive results differ by less than tol * max(1, |I|).
/// Throws NonConvergenceError after cfg.max_refinements doublings.
template <class T, class F>
QuadResult<T> integrate_gauss_legendre(F&& f, double a, double b, const QuadratureConfig& cfg) {
  const auto& rule = gauss_legendre(cfg.nodes);
  auto composite = [&](int panels) {
    T acc{};
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
      const double lo = a + p * h;
      for (std::size_t i = 0; i < rule.x.size(); ++i) {
        const double t = lo + 0.5 * h * (rule.x[i] + 1.0);
        detail::axpy(acc, 0.5 * h * rule.w[i], f(t));
      }
    }
    return acc;
  };
  QuadResult<T> res;
  res.value = composite(1);
  for (int k = 1; k <= cfg.max_refinements; ++k) {
    T next = composite(1 << k);
    res.last_change = detail::difference(next, res.value);
    res.value = std::move(next);
    res.refinements = k;
    if (res.last_change < cfg.tol * std::max(1.0, detail::magnitude(res.value))) {
      res.converged = true;
      return res;
    }
  }
  throw NonConvergenceError("Gauss-Legendre quadrature did not converge");
}

/// tanh-sinh quadrature over (0, 1); f receives a UnitPoint with exact
/// complement. Levels halve the step (nested nodes); converged when
/// successive levels differ by <= tol * max(|I|, abs_floor).
/// Nodes whose weight falls below skip_weight are not evaluated (for
/// integrands known to be bounded). Returns converged = false instead of throwing.
template <class T, class F>
QuadResult<T> integrate_tanh_sinh_unit(F&& f, double tol, int max_levels, double abs_floor = 0.0,
                                       double skip_weight = 0.0) {
  constexpr double kPi = std::numbers::pi;
  const double umax = std::asinh(700.0 / kPi);
  auto node = [&](double u, T& acc, double h) {
    const double v = kPi * std::sinh(std::abs(u));
    const double e = std::exp(-v);
    const double big = 1.0 / (1.0 + e);  // distance from the near endpoint's opposite side
    const double small = e / (1.0 + e);
    if (small == 0.0) return;
    const double weight = kPi * std::cosh(u) * big * small * h;
    if (weight < skip_weight) return;
    const UnitPoint p = u >= 0.0 ? UnitPoint{big, small} : UnitPoint{small, big};
    auto v_f = f(p);
    if (!detail::all_finite(v_f)) {
      if (weight < 1e-200) return;
      throw DomainError("tanh-sinh: non-finite integrand value");
    }
    detail::axpy(acc, weight, v_f);
  };

  QuadResult<T> res;
  double h = 1.0;
  T sum{};
  for (double u = -std::floor(umax); u <= umax; u += 1.0) node(u, sum, 1.0);
  res.value = sum;
  for (int level = 1; level <= max_levels; ++level) {
    h *= 0.5;
    T added{};
    const int kmax = static_cast<int>(umax / h);
    for (int k = -kmax; k <= kmax; ++k) {
      if ((k & 1) == 0) continue;
      node(k * h, added, 1.0);
    }
    // sum holds Σ over all nodes so far (unweighted by h).
    if constexpr (std::is_arithmetic_v<T> || std::is_same_v<T, std::complex<double>>) {
      sum += added;
    } else {
      if (!added.empty()) detail::axpy(sum, 1.0, added);
    }
    T next = detail::scaled(sum, h);
    res.last_change = detail::difference(next, res.value);
    res.value = std::move(next);
    res.refinements = level;
    if (level >= 3 && res.last_change <= tol * std::max(detail::magnitude(res.value), abs_floor)) {
      res.converged = true;
      return res;
    }
  }
  return res;
}

/// Dispatches on cfg.endpoint_mode: composite Gauss–Legendre, or tanh-sinh
/// over [a, b] (with the affine map t -> a + (b - a) t).
template <class T, class F>
QuadResult<T> integrate(F&& f, double a, double b, const QuadratureConfig& cfg) {
  validate(cfg);
  if (cfg.endpoint_mode == EndpointMode::plain) return integrate_gauss_legendre<T>(f, a, b, cfg);
  auto mapped = [&](UnitPoint p) {
    const double x = p.t <= 0.5 ? a + (b - a) * p.t : b - (b - a) * p.tc;
    return detail::scaled(f(x), b - a);
  };
  auto res = integrate_tanh_sinh_unit<T>(mapped, cfg.tol, cfg.max_refinements, 1.0);
  if (!res.converged) throw NonConvergenceError("tanh-sinh quadrature did not converge");
  return res;
}

}  // namespace wco
