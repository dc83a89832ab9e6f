#include "wco/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wco/errors.hpp"

namespace wco {

namespace {

constexpr double kPi = std::numbers::pi;

struct Quadratic {
  double c0, c1, c2;
  double operator()(UnitPoint u) const {
    if (u.t <= 0.5) return c0 + u.t * (c1 + u.t * c2);
    return (c0 + c1 + c2) - u.tc * ((2.0 * c2 + c1) - u.tc * c2);
  }
};

Quadratic delta_poly(const LinearFractionalData& lf) {
  const Affine &a0 = lf.a0, &a1 = lf.a1, &b0 = lf.b0, &b1 = lf.b1;
  return {a1.offset * b0.offset - a0.offset * b1.offset,
          a1.slope * b0.offset + a1.offset * b0.slope - a0.slope * b1.offset - a0.offset * b1.slope,
          a1.slope * b0.slope - a0.slope * b1.slope};
}

UnitPoint unit(double t) { return {t, 1.0 - t}; }

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("alpha must lie in (0, 2)");
}

}  // namespace

LinearFractionalData lf_data(const OperatorSpec& spec) {
  const GammaCase c = classify_gamma(spec);
  if (c == GammaCase::general) throw NotLinearFractionalError("lf_data: gamma is not linear fractional");
  const auto v = gamma_coeff_vector_pattern(spec);
  double scale = 0.0;
  for (const auto* vec : {&v.a_slope, &v.a_const, &v.b_slope, &v.b_const})
    for (double x : *vec) scale = std::max(scale, std::abs(x));
  for (std::size_t i = 2; i < v.a_slope.size(); ++i)
    for (const auto* vec : {&v.a_slope, &v.a_const, &v.b_slope, &v.b_const})
      if (std::abs((*vec)[i]) > 1e-14 * scale)
        throw NotLinearFractionalError("lf_data: higher coefficients of gamma do not vanish");
  LinearFractionalData lf;
  lf.a0 = {v.a_slope[0], v.a_const[0]};
  lf.a1 = {v.a_slope[1], v.a_const[1]};
  lf.b0 = {v.b_slope[0], v.b_const[0]};
  lf.b1 = {v.b_slope[1], v.b_const[1]};
  lf.gamma_case = c;
  return lf;
}

double delta(const LinearFractionalData& lf, UnitPoint u) { return delta_poly(lf)(u); }
double delta(const LinearFractionalData& lf, double t) { return delta(lf, unit(t)); }

double b_gap(const LinearFractionalData& lf, UnitPoint u) {
  const double b0 = lf.b0(u), b1 = lf.b1(u);
  const double denom = std::abs(b0) + std::abs(b1);
  if (denom == 0.0) return 0.0;
  // |b0|² − |b1|² = (b0 − b1)(b0 + b1), each factor formed before evaluation.
  return (lf.b0 - lf.b1)(u) * (lf.b0 + lf.b1)(u) / denom;
}

double A_alpha(const LinearFractionalData& lf, UnitPoint u, double alpha) {
  check_alpha(alpha);
  const double b0 = std::abs(lf.b0(u)), b1 = std::abs(lf.b1(u));
  const double gap = b_gap(lf, u);
  if (!(gap > 0.0)) throw DomainError("A_alpha: requires |b1(t)| < |b0(t)|");
  if (alpha > 1.0) return 1.0;
  if (alpha == 1.0) return b1 / b0 * std::sqrt(-std::log(gap / b0));
  return b1 * std::pow(b0, -alpha) * std::pow(gap, alpha - 1.0);
}

double A_alpha(const LinearFractionalData& lf, double t, double alpha) { return A_alpha(lf, unit(t), alpha); }

namespace {

struct Bullets {
  double m1, m2, m3;
};

Bullets bullet_margins(const LinearFractionalData& lf, double t) {
  const UnitPoint u = unit(t);
  return {std::abs((lf.b0 - lf.b1)(u)) - std::abs((lf.a0 - lf.a1)(u)),
          std::abs((lf.b0 + lf.b1)(u)) - std::abs((lf.a0 + lf.a1)(u)), b_gap(lf, u)};
}

constexpr double kBulletTol = 1e-12;

}  // namespace

Certificate prop4_conditions(const LinearFractionalData& lf, const std::vector<double>& tgrid) {
  if (tgrid.empty()) throw DomainError("empty t grid");
  Certificate cert;
  cert.kind = CertificateKind::prop4_conditions;
  cert.grid = std::to_string(tgrid.size()) + " t-nodes";
  for (const double t : tgrid) {
    if (!(t > 0.0 && t < 1.0)) throw DomainError("t grid must lie in the open interval (0, 1)");
    const Bullets b = bullet_margins(lf, t);
    std::string note;
    if (b.m1 < -kBulletTol) note += "|a0-a1|<=|b0-b1| fails; ";
    if (b.m2 < -kBulletTol) note += "|a0+a1|<=|b0+b1| fails; ";
    if (!(b.m3 > 0.0)) note += "|b1|<|b0| fails; ";
    const bool ok = note.empty();
    double margin = std::min({b.m1 + kBulletTol, b.m2 + kBulletTol, b.m3});
    if (!ok && margin >= 0.0) margin = -std::numeric_limits<double>::min();
    if (!note.empty()) note.resize(note.size() - 2);
    cert.record({t, cplx{}, margin, note}, ok);
  }
  return cert;
}

Certificate prop4_conditions(const LinearFractionalData& lf) { return prop4_conditions(lf, interior_t_grid(33)); }

namespace {

// One piece [lo, hi] of (0, 1), pulled back to the unit interval.
EndpointIntegral integrate_piece(const std::function<double(UnitPoint)>& f, double lo, double hi,
                                 const EndpointIntegralConfig& cfg) {
  const double h = hi - lo;
  auto g = [&](UnitPoint s) {
    const UnitPoint u = s.t <= 0.5 ? UnitPoint{lo + h * s.t, (1.0 - lo) - h * s.t}
                                   : UnitPoint{hi - h * s.tc, (1.0 - hi) + h * s.tc};
    return h * f(u);
  };
  EndpointIntegral out;
  const auto& rule = gauss_legendre(64);
  // ∫ over the shell [2^−(j+1), 2^−j] measured from the given end.
  auto shell = [&](int j, bool left) {
    const double a = std::ldexp(1.0, -(j + 1)), width = a;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      const double s = a + 0.5 * width * (rule.x[i] + 1.0);
      acc += 0.5 * width * rule.w[i] * g(left ? UnitPoint{s, 1.0 - s} : UnitPoint{1.0 - s, s});
    }
    return acc;
  };
  for (const bool left : {true, false}) {
    int run = 0;
    double prev = shell(cfg.first_shell, left);
    for (int j = cfg.first_shell + 1; j < cfg.first_shell + cfg.shells; ++j) {
      const double cur = shell(j, left);
      const bool grows = std::abs(prev) > 0.0 && std::abs(cur) >= cfg.ratio_threshold * std::abs(prev);
      run = grows ? run + 1 : 0;
      prev = cur;
      if (!std::isfinite(cur) || run >= cfg.sustained) {
        out.divergent = true;
        out.divergent_end = left ? "left" : "right";
        return out;
      }
    }
  }
  auto res = integrate_tanh_sinh_unit<double>(g, cfg.tol, cfg.max_levels, 1e-300);
  out.levels = res.refinements;
  out.last_change = res.last_change;
  out.converged = res.converged;
  out.value = res.value;
  return out;
}

// Interior zeros of an affine function.
void add_root(std::vector<double>& breaks, Affine a) {
  if (a.slope == 0.0) return;
  const double r = -a.offset / a.slope;
  if (r > 1e-12 && r < 1.0 - 1e-12) breaks.push_back(r);
}

}  // namespace

EndpointIntegral integrate_endpoint_singular(const std::function<double(UnitPoint)>& f,
                                             const EndpointIntegralConfig& cfg, std::vector<double> breaks) {
  std::sort(breaks.begin(), breaks.end());
  std::vector<double> edges{0.0};
  for (const double b : breaks)
    if (b > edges.back() + 1e-12 && b < 1.0 - 1e-12) edges.push_back(b);
  edges.push_back(1.0);
  EndpointIntegral total;
  total.value = 0.0;
  total.converged = true;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    const EndpointIntegral piece = integrate_piece(f, edges[k], edges[k + 1], cfg);
    if (piece.divergent) {
      piece.divergent_end == "left" ? total.divergent_end = (k == 0 ? "left" : "interior")
                                    : total.divergent_end = (k + 2 == edges.size() ? "right" : "interior");
      total.divergent = true;
      total.value.reset();
      total.converged = false;
      return total;
    }
    *total.value += *piece.value;
    total.levels = std::max(total.levels, piece.levels);
    total.last_change += piece.last_change;
    total.converged = total.converged && piece.converged;
  }
  return total;
}

BoundReport prop4_bound(const LinearFractionalData& lf, double alpha, const EndpointIntegralConfig& cfg) {
  check_alpha(alpha);
  BoundReport rep;
  rep.alpha = alpha;
  rep.conditions = {true, true, true};
  for (const double t : interior_t_grid(33)) {
    const Bullets b = bullet_margins(lf, t);
    rep.conditions[0] = rep.conditions[0] && b.m1 >= -kBulletTol;
    rep.conditions[1] = rep.conditions[1] && b.m2 >= -kBulletTol;
    rep.conditions[2] = rep.conditions[2] && b.m3 > 0.0;
  }
  if (!(rep.conditions[0] && rep.conditions[1] && rep.conditions[2])) return rep;
  const Quadratic d = delta_poly(lf);
  auto integrand = [&](UnitPoint u) { return std::pow(std::abs(d(u)), -alpha / 2.0) * A_alpha(lf, u, alpha); };
  std::vector<double> breaks;
  for (const Affine a : {lf.b0, lf.b1, lf.a0, lf.a1}) add_root(breaks, a);
  rep.integral = integrate_endpoint_singular(integrand, cfg, breaks);
  rep.delta_integrable = !rep.integral.divergent && rep.integral.converged;
  if (rep.delta_integrable) rep.bound_value = rep.integral.value;
  return rep;
}

namespace {

double bracket_integrand_area(const OperatorSpec& spec, double t, double alpha, cplx z) {
  const KernelPair k = kernel(spec, t, z);
  return std::norm(k.w_dz) / std::pow(std::abs(k.gamma_dz), alpha);
}

double bracket_integrand_sup(const OperatorSpec& spec, double t, double alpha, cplx z) {
  const KernelPair k = kernel(spec, t, z);
  return std::norm(k.w) / std::pow(std::abs(k.gamma_dz), alpha);
}

// ∫_0^{2π} g(ρ e^{iθ}) dθ by the trapezoid rule, doubled until stable.
double ring(const std::function<double(cplx)>& g, double rho, const AreaQuadConfig& cfg) {
  int n = cfg.min_angles;
  double sum = 0.0;
  for (int j = 0; j < n; ++j) sum += g(std::polar(rho, 2.0 * kPi * j / n));
  double value = 2.0 * kPi * sum / n;
  while (n < cfg.max_angles) {
    for (int j = 0; j < n; ++j) sum += g(std::polar(rho, 2.0 * kPi * (j + 0.5) / n));
    n *= 2;
    const double next = 2.0 * kPi * sum / n;
    const bool done = std::abs(next - value) <= cfg.angle_tol * std::abs(next);
    value = next;
    if (done) break;
  }
  return value;
}

double disc_integral(const std::function<double(cplx)>& g, double eps, const AreaQuadConfig& cfg) {
  const auto& rule = gauss_legendre(cfg.radial_nodes);
  const double outer = 1.0 - eps;
  double total = 0.0;
  double lo = 0.0;
  for (int k = 1; lo < outer; ++k) {
    const double hi = std::min(outer, 1.0 - std::ldexp(1.0, -k));
    const double h = hi - lo;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      const double rho = lo + 0.5 * h * (rule.x[i] + 1.0);
      total += 0.5 * h * rule.w[i] * rho * ring(g, rho, cfg);
    }
    lo = hi;
  }
  return total / kPi;
}

}  // namespace

double area_term(const OperatorSpec& spec, double t, double alpha, const AreaQuadConfig& cfg,
                 std::vector<double>* by_eps) {
  check_alpha(alpha);
  if (cfg.eps.empty()) throw DomainError("area_term: no cutoffs given");
  auto g = [&](cplx z) { return bracket_integrand_area(spec, t, alpha, z); };
  std::vector<double> vals;
  for (const double e : cfg.eps) {
    if (!(e > 0.0 && e < 1.0)) throw DomainError("area_term: cutoff must lie in (0, 1)");
    vals.push_back(disc_integral(g, e, cfg));
  }
  if (by_eps) *by_eps = vals;
  const std::size_t n = vals.size();
  if (n < 3) return vals.back();
  const double d1 = vals[n - 2] - vals[n - 3], d2 = vals[n - 1] - vals[n - 2];
  if (std::abs(d2) <= 1e-12 * std::max(std::abs(vals.back()), 1e-300) || d1 == 0.0) return vals.back();
  const double ratio = d2 / d1;
  if (ratio > cfg.divergence_ratio)
    throw DivergentAreaIntegralError("area integral does not settle as the cutoff shrinks");
  if (ratio < 0.0) return vals.back();
  return vals.back() + d2 * ratio / (1.0 - ratio);
}

double sup_term(const OperatorSpec& spec, double t, double alpha, const AreaQuadConfig& cfg) {
  check_alpha(alpha);
  auto g = [&](double rho, double theta) {
    try {
      const double v = bracket_integrand_sup(spec, t, alpha, std::polar(rho, theta));
      return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    } catch (const KernelPoleError&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  double best = -1.0, br = 0.0, bt = 0.0;
  for (int i = 0; i < cfg.sup_radii; ++i) {
    const double rho = static_cast<double>(i) / (cfg.sup_radii - 1);
    for (int j = 0; j < (i == 0 ? 1 : cfg.sup_angles); ++j) {
      const double theta = 2.0 * kPi * j / cfg.sup_angles;
      const double v = g(rho, theta);
      if (v > best) best = v, br = rho, bt = theta;
    }
  }
  if (!std::isfinite(best)) return best;
  // Compass search about the best grid point.
  double dr = 1.0 / (cfg.sup_radii - 1), dt = 2.0 * kPi / cfg.sup_angles;
  while (dr > 1e-12 || dt > 1e-12) {
    bool moved = false;
    for (const auto& [sr, st] : {std::pair{1, 0}, std::pair{-1, 0}, std::pair{0, 1}, std::pair{0, -1}}) {
      const double r = std::clamp(br + sr * dr, 0.0, 1.0), th = bt + st * dt;
      const double v = g(r, th);
      if (v > best) {
        best = v, br = r, bt = th;
        moved = true;
      }
    }
    if (!moved) dr *= 0.5, dt *= 0.5;
  }
  return best;
}

Lemma2Terms lemma2_bracket(const OperatorSpec& spec, double t, double alpha, const AreaQuadConfig& cfg) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError("lemma2_bracket: t must lie in (0, 1)");
  Lemma2Terms out;
  out.area = area_term(spec, t, alpha, cfg, &out.area_by_eps);
  out.sup = sup_term(spec, t, alpha, cfg);
  return out;
}

Theorem3Result theorem3_bound(const OperatorSpec& spec, double alpha, double tol, int max_levels,
                              const AreaQuadConfig& cfg) {
  Theorem3Result out;
  auto integrand = [&](UnitPoint u) {
    const double t = u.t <= 0.5 ? u.t : 1.0 - u.tc;
    if (!(t > 0.0 && t < 1.0)) return 0.0;
    return std::sqrt(area_term(spec, t, alpha, cfg) + sup_term(spec, t, alpha, cfg));
  };
  try {
    auto res = integrate_tanh_sinh_unit<double>(integrand, tol, max_levels, 1e-300, 1e-40);
    out.converged = res.converged;
    out.levels = res.refinements;
    if (std::isfinite(res.value)) out.value = res.value;
    if (!res.converged) out.note = "outer quadrature did not settle";
  } catch (const DivergentAreaIntegralError& e) {
    out.note = e.what();
  } catch (const DomainError& e) {
    out.note = e.what();
  }
  return out;
}

}  // namespace wco
