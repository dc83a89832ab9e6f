#include "wco/finite_section.hpp"

#include <cmath>

#include "wco/apply.hpp"
#include "wco/certificates.hpp"
#include "wco/dirichlet.hpp"
#include "wco/errors.hpp"
#include "wco/parallel.hpp"
#include "wco/power_series.hpp"
#include "wco/quadrature.hpp"
#include "wco/selfmap.hpp"

namespace wco {

namespace {

// Unweighted coefficients c[n * N + k] = coeff_n(I(z^k)).
std::vector<cplx> series_route(const OperatorSpec& spec, int n, const SectionOptions& opts, bool& converged) {
  const Polynomial& n1 = spec.phi1().num();
  const Polynomial& d1 = spec.phi1().den();
  const Polynomial& n2 = spec.phi2().num();
  const Polynomial& d2 = spec.phi2().den();
  const Polynomial a = n1 * d2, b = n2 * d1, den = d1 * d2;
  const ps::Series p = ps::of_map(spec.p(), n), q = ps::of_map(spec.q(), n);

  auto integrand = [&](UnitPoint u) {
    // r(t, z) = (1 − t)φ1 + tφ2 with the exact complement for t near 1.
    const Polynomial num = a * u.tc + b * u.t;
    const ps::Series r = ps::of_rational(num, den, n);
    ps::Series d = ps::mul(p, r);
    for (int i = 0; i < n; ++i) d[i] += q[i];
    ps::Series h = ps::inverse(d);
    std::vector<cplx> out(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
      if (k > 0) h = ps::div_poly(ps::mul_poly(h, num), den);
      for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i) * n + k] = h[i];
    }
    return out;
  };
  auto res = integrate_tanh_sinh_unit<std::vector<cplx>>(integrand, opts.tol, opts.max_levels, 1.0, 1e-20);
  converged = res.converged;
  return res.value;
}

std::vector<cplx> sampled_route(const OperatorSpec& spec, int n, const SectionOptions& opts, bool& ill) {
  std::vector<cplx> out(static_cast<std::size_t>(n) * n);
  std::vector<char> flags(n, 0);
  QuadratureConfig quad;
  quad.tol = 1e-13;
  parallel_for(n, [&](int k) {
    AnalyticSeries ek(std::vector<cplx>(k + 1, 0.0));
    ek.coeffs[k] = 1.0;
    auto ext = coeffs_from_samples([&](cplx z) { return apply_direct(spec, ek, z, quad); }, opts.r, n - 1, opts.m);
    flags[k] = ext.ill_conditioned;
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i) * n + k] = ext.series.coeffs[i];
  });
  for (char f : flags) ill = ill || f;
  return out;
}

}  // namespace

FiniteSection finite_section(const OperatorSpec& spec, double alpha, int n, const SectionOptions& opts) {
  if (n < 1) throw DimensionError("finite_section: N must be at least 1");
  if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("finite_section: alpha must lie in (0, 2)");
  if (opts.check_certificates) {
    const auto grid = DiscGrid::polar(9, 32);
    if (!well_defined_certificate(spec, grid).pass)
      throw ConditionError("finite_section: well-definedness certificate fails");
    if (!selfmap_certificate_exact(spec, grid).pass)
      throw ConditionError("finite_section: self-map certificate fails");
  }

  FiniteSection fs;
  std::vector<cplx> raw = opts.method == SectionMethod::series ? series_route(spec, n, opts, fs.converged)
                                                               : sampled_route(spec, n, opts, fs.ill_conditioned);
  fs.matrix = DenseMatrix(n, n);
  std::vector<double> sw(n);
  for (int i = 0; i < n; ++i) sw[i] = std::sqrt(dirichlet_weight(i, alpha));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const cplx c = raw[static_cast<std::size_t>(i) * n + k];
      fs.max_imag = std::max(fs.max_imag, std::abs(c.imag()));
      fs.matrix(i, k) = sw[i] * c.real() / sw[k];
    }
  return fs;
}

}  // namespace wco
