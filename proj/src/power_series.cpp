#include "wco/power_series.hpp"

#include "wco/errors.hpp"

namespace wco::ps {

Series mul_poly(const Series& a, const Polynomial& num) {
  const int n = static_cast<int>(a.size());
  Series out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    cplx acc = 0.0;
    for (int k = 0; k <= std::min(i, num.degree()); ++k) acc += num.coeff(k) * a[i - k];
    out[i] = acc;
  }
  return out;
}

Series div_poly(const Series& a, const Polynomial& den) {
  const double d0 = den.coeff(0);
  if (d0 == 0.0) throw PoleError("power series: denominator vanishes at the origin");
  const int n = static_cast<int>(a.size());
  Series out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    cplx acc = a[i];
    for (int k = 1; k <= std::min(i, den.degree()); ++k) acc -= den.coeff(k) * out[i - k];
    out[i] = acc / d0;
  }
  return out;
}

Series of_rational(const Polynomial& num, const Polynomial& den, int n) {
  Series one(n, 0.0);
  if (n > 0) one[0] = 1.0;
  return div_poly(mul_poly(one, num), den);
}

Series exp_series(int n) {
  Series out(n, 0.0);
  cplx term = 1.0;
  for (int k = 0; k < n; ++k) {
    out[k] = term;
    term /= static_cast<double>(k + 1);
  }
  return out;
}

Series of_map(const AnalyticMap& m, int n) {
  Series s = of_rational(m.factor().num(), m.factor().den(), n);
  return m.has_exp() ? mul(s, exp_series(n)) : s;
}

Series mul(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.size(), b.size());
  Series out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= i; ++k) out[i] += a[k] * b[i - k];
  return out;
}

Series inverse(const Series& a) {
  if (a.empty()) return {};
  if (a[0] == 0.0) throw PoleError("power series: inverse of a series vanishing at the origin");
  const std::size_t n = a.size();
  Series out(n, 0.0);
  out[0] = 1.0 / a[0];
  for (std::size_t i = 1; i < n; ++i) {
    cplx acc = 0.0;
    for (std::size_t k = 1; k <= i; ++k) acc += a[k] * out[i - k];
    out[i] = -acc / a[0];
  }
  return out;
}

}  // namespace wco::ps
