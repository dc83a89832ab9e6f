#include "wco/apply.hpp"

#include <cmath>

#include "wco/certificates.hpp"
#include "wco/errors.hpp"

namespace wco {

cplx apply_direct(const OperatorSpec& spec, const AnalyticSeries& f, cplx z, const QuadratureConfig& quad) {
  const auto wd = well_defined_at(spec, z);
  if (!wd.pass) throw ConditionError("apply_direct: well-definedness condition fails at z");
  const auto seg = segment(spec, z);
  const cplx p = spec.p()(z), q = spec.q()(z);
  auto integrand = [&](double t) {
    const cplx r = seg.phi1z + t * seg.length;
    return f(r) / (p * r + q);
  };
  return integrate<cplx>(integrand, 0.0, 1.0, quad).value;
}

cplx apply_composed(const OperatorSpec& spec, const AnalyticSeries& f, cplx z, const QuadratureConfig& quad,
                    int check_t_nodes) {
  const auto wd = well_defined_at(spec, z);
  if (!wd.pass) throw ConditionError("apply_composed: well-definedness condition fails at z");
  DiscGrid single;
  single.points = {z};
  const auto sm = selfmap_condition_sampled(spec, interior_t_grid(check_t_nodes), single);
  if (!sm.pass) throw ConditionError("apply_composed: self-map condition fails at z");
  auto integrand = [&](double t) {
    const KernelPair k = kernel(spec, t, z);
    return k.w * f(k.gamma);
  };
  return integrate<cplx>(integrand, 0.0, 1.0, quad).value;
}

}  // namespace wco
