#pragma once

#include <vector>

#include "wco/analytic_map.hpp"

namespace wco {

/// Truncated power-series arithmetic on coefficient vectors of a fixed length.
namespace ps {

using Series = std::vector<cplx>;

/// Taylor coefficients 0..n−1 of num/den; throws PoleError if den(0) = 0.
Series of_rational(const Polynomial& num, const Polynomial& den, int n);
Series of_map(const AnalyticMap& m, int n);
Series exp_series(int n);

Series mul(const Series& a, const Series& b);
Series inverse(const Series& a);
/// a · num, truncated to the length of a.
Series mul_poly(const Series& a, const Polynomial& num);
/// a / den, truncated; throws PoleError if den(0) = 0.
Series div_poly(const Series& a, const Polynomial& den);

}  // namespace ps

}  // namespace wco
