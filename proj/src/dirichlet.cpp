#include "wco/dirichlet.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <vector>

#include "wco/errors.hpp"

namespace wco {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("alpha must lie in (0, 2)");
}

}  // namespace

double dirichlet_weight(std::size_t n, double alpha) {
  return n == 0 ? 1.0 : std::pow(static_cast<double>(n), 1.0 - alpha);
}

double dirichlet_norm(const AnalyticSeries& f, double alpha) {
  check_alpha(alpha);
  double acc = 0.0;
  for (std::size_t n = 0; n < f.size(); ++n) acc += dirichlet_weight(n, alpha) * std::norm(f.coeffs[n]);
  return std::sqrt(acc);
}

double growth_majorant(double alpha, double r) {
  check_alpha(alpha);
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("growth_majorant: r must lie in [0, 1)");
  const double x = r * r;
  double sum = 1.0;
  double power = 1.0;
  for (long n = 1;; ++n) {
    power *= x;
    if (power == 0.0) break;
    const double term = std::pow(static_cast<double>(n), alpha - 1.0) * power;
    sum += term;
    // Successive-term ratio beyond n is at most q; tail <= term q / (1 − q).
    const double q = x * std::max(1.0, std::pow(1.0 + 1.0 / n, alpha - 1.0));
    if (q < 1.0 && term * q / (1.0 - q) < 1e-15 * sum) break;
  }
  return std::sqrt(sum);
}

CoefficientExtraction coeffs_from_samples(const std::function<cplx(cplx)>& sampler, double r, int n, int m) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("coeffs_from_samples: r must lie in (0, 1)");
  if (n < 0) throw DomainError("coeffs_from_samples: N must be nonnegative");
  if (m < 4 * n || m < 1 || (m & (m - 1)) != 0)
    throw DomainError("coeffs_from_samples: M must be a power of two with M >= 4N");

  std::vector<cplx> samples(m), spectrum(m);
  for (int k = 0; k < m; ++k) samples[k] = sampler(std::polar(r, 2.0 * std::numbers::pi * k / m));

  {
    // FFTW planning is not thread-safe; execution is.
    static std::mutex plan_mu;
    fftw_plan plan;
    {
      std::lock_guard lock(plan_mu);
      plan = fftw_plan_dft_1d(m, reinterpret_cast<fftw_complex*>(samples.data()),
                              reinterpret_cast<fftw_complex*>(spectrum.data()), FFTW_FORWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::lock_guard lock(plan_mu);
    fftw_destroy_plan(plan);
  }

  CoefficientExtraction out;
  out.series.coeffs.resize(n + 1);
  double rn = 1.0;
  for (int k = 0; k <= n; ++k) {
    out.series.coeffs[k] = spectrum[k] / (static_cast<double>(m) * rn);
    if (rn < 1e-12) out.ill_conditioned = true;
    rn *= r;
  }
  return out;
}

}  // namespace wco
