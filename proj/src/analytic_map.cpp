#include "wco/analytic_map.hpp"

#include <cmath>

#include "wco/errors.hpp"

namespace wco {

const RationalMap& AnalyticMap::rational() const {
  if (exp_) throw ShapeError("map involves exp and is not rational");
  return factor_;
}

cplx AnalyticMap::value(cplx z) const {
  const cplx f = factor_(z);
  return exp_ ? f * std::exp(z) : f;
}

cplx AnalyticMap::derivative(cplx z) const {
  if (!exp_) return factor_.derivative(z);
  return (factor_.derivative(z) + factor_(z)) * std::exp(z);
}

}  // namespace wco
