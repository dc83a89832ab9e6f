#pragma once

#include "wco/operator_spec.hpp"
#include "wco/quadrature.hpp"
#include "wco/series.hpp"

namespace wco {

/// I(f)(z) = ∫_0^1 f(r_z(t)) / (p(z) r_z(t) + q(z)) dt with r_z(t) = φ1(z) + t[S_z].
/// Throws ConditionError when well_defined_at fails at z.
cplx apply_direct(const OperatorSpec& spec, const AnalyticSeries& f, cplx z, const QuadratureConfig& quad = {});

/// I(f)(z) = ∫_0^1 w(t, z) f(γ(t, z)) dt. Additionally requires the sampled
/// self-map condition on `check_t_nodes` interior t-nodes at z.
cplx apply_composed(const OperatorSpec& spec, const AnalyticSeries& f, cplx z, const QuadratureConfig& quad = {},
                    int check_t_nodes = 33);

}  // namespace wco
