#include "wco/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wco/errors.hpp"

namespace wco {

DiscGrid DiscGrid::polar(int radii, int angles, double rmax) {
  if (radii < 1 || angles < 1) throw DomainError("polar grid needs positive sizes");
  if (rmax > 1.0 - 1e-6 || rmax <= 0.0) throw DomainError("polar grid radius must lie in (0, 1 - 1e-6]");
  DiscGrid g;
  g.radii = radii;
  g.angles = angles;
  g.rmax = rmax;
  g.points.emplace_back(0.0, 0.0);
  for (int i = 1; i < radii; ++i) {
    const double r = rmax * i / (radii - 1);
    for (int j = 0; j < angles; ++j) g.points.push_back(std::polar(r, 2.0 * std::numbers::pi * j / angles));
  }
  return g;
}

std::vector<double> interior_t_grid(int n) {
  if (n < 1) throw DomainError("t grid needs at least one node");
  std::vector<double> t(n);
  for (int j = 1; j <= n; ++j) t[j - 1] = static_cast<double>(j) / (n + 1);
  return t;
}

const char* to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::well_defined: return "well-defined";
    case CertificateKind::selfmap_sampled: return "self-map-sampled";
    case CertificateKind::selfmap_arc: return "self-map-arc";
    case CertificateKind::prop4_conditions: return "prop4-conditions";
    case CertificateKind::generated: return "generated";
  }
  return "unknown";
}

void Certificate::record(const Witness& w, bool ok) {
  if (nodes == 0 || w.margin < min_margin) min_margin = w.margin;
  ++nodes;
  if (ok) return;
  pass = false;
  ++failures;
  witnesses.push_back(w);
  std::sort(witnesses.begin(), witnesses.end(), [](const Witness& a, const Witness& b) { return a.margin < b.margin; });
  if (witnesses.size() > kMaxWitnesses) witnesses.pop_back();
}

namespace {

std::string describe(const DiscGrid& g) {
  return "polar " + std::to_string(g.radii) + "x" + std::to_string(g.angles) + " rmax " + std::to_string(g.rmax);
}

}  // namespace

Certificate well_defined_certificate(const OperatorSpec& spec, const DiscGrid& grid) {
  if (grid.points.empty()) throw DomainError("empty grid");
  Certificate cert;
  cert.kind = CertificateKind::well_defined;
  cert.grid = describe(grid);
  for (const cplx z : grid.points) {
    if (std::abs(z) > 1.0 - 1e-6 + 1e-15) throw DomainError("grid point outside |z| <= 1 - 1e-6");
    try {
      const auto pt = well_defined_at(spec, z);
      cert.record({std::nullopt, z, pt.margin, {}}, pt.pass);
    } catch (const Error& e) {
      cert.record({std::nullopt, z, -std::numeric_limits<double>::max(), e.what()}, false);
    }
  }
  return cert;
}

Certificate selfmap_condition_sampled(const OperatorSpec& spec, const std::vector<double>& tgrid,
                                      const DiscGrid& zgrid) {
  if (tgrid.empty() || zgrid.points.empty()) throw DomainError("empty grid");
  Certificate cert;
  cert.kind = CertificateKind::selfmap_sampled;
  cert.grid = describe(zgrid) + ", " + std::to_string(tgrid.size()) + " t-nodes";
  for (const cplx z : zgrid.points) {
    cplx f1, f2, p, q;
    try {
      f1 = spec.phi1()(z), f2 = spec.phi2()(z), p = spec.p()(z), q = spec.q()(z);
    } catch (const Error& e) {
      cert.record({std::nullopt, z, -std::numeric_limits<double>::max(), e.what()}, false);
      continue;
    }
    const cplx s = f2 - f1;
    for (const double t : tgrid) {
      if (!(t > 0.0 && t < 1.0)) throw DomainError("t grid must lie in the open interval (0, 1)");
      const double lhs = std::abs(f1 * f2 * p + (f1 + t * s) * q);
      const double rhs = std::abs((f2 - t * s) * p + q);
      const double margin = rhs - lhs;
      cert.record({t, z, margin, {}}, margin > 0.0);
    }
  }
  return cert;
}

}  // namespace wco
