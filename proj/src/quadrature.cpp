#include "wco/quadrature.hpp"

#include <map>
#include <mutex>

namespace wco {

void validate(const QuadratureConfig& cfg) {
  if (cfg.nodes < 2) throw DomainError("quadrature needs at least 2 nodes");
  if (!(cfg.tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  if (cfg.max_refinements < 1) throw DomainError("quadrature needs at least one refinement");
}

namespace {

GaussLegendreRule build_rule(int n) {
  GaussLegendreRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  const double pi = std::numbers::pi;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.x[i] = -x;
    rule.x[n - 1 - i] = x;
    rule.w[i] = w;
    rule.w[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

}  // namespace wco
