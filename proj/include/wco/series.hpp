#pragma once

#include <vector>

#include "wco/polynomial.hpp"

namespace wco {

/// Truncated Taylor series Σ a_n z^n with complex coefficients.
struct AnalyticSeries {
  std::vector<cplx> coeffs;

  AnalyticSeries() = default;
  explicit AnalyticSeries(std::vector<cplx> c) : coeffs(std::move(c)) {}
  static AnalyticSeries from_real(const std::vector<double>& c) {
    return AnalyticSeries(std::vector<cplx>(c.begin(), c.end()));
  }

  std::size_t size() const noexcept { return coeffs.size(); }

  cplx operator()(cplx z) const noexcept {
    cplx acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
  }
  cplx derivative(cplx z) const noexcept {
    cplx acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * coeffs[k];
    return acc;
  }
};

}  // namespace wco
