#include "wco/circle.hpp"

#include <algorithm>
#include <cmath>

#include "wco/errors.hpp"

namespace wco {

CircleDeterminants circle_determinants(cplx w1, cplx w2, cplx w3) {
  const cplx w[3] = {w1, w2, w3};
  auto det3 = [](auto m00, auto m01, auto m02, auto m10, auto m11, auto m12, auto m20, auto m21, auto m22) {
    return m00 * (m11 * m22 - m12 * m21) - m01 * (m10 * m22 - m12 * m20) + m02 * (m10 * m21 - m11 * m20);
  };
  const cplx mi(0.0, -1.0);
  CircleDeterminants out{};
  out.a = det3(w[0].real(), w[0].imag(), 1.0, w[1].real(), w[1].imag(), 1.0, w[2].real(), w[2].imag(), 1.0);
  out.d = det3(cplx(std::norm(w[0])), mi * w[0], cplx(1.0), cplx(std::norm(w[1])), mi * w[1], cplx(1.0),
               cplx(std::norm(w[2])), mi * w[2], cplx(1.0));
  out.f = -det3(std::norm(w[0]), w[0].real(), w[0].imag(), std::norm(w[1]), w[1].real(), w[1].imag(),
                std::norm(w[2]), w[2].real(), w[2].imag());
  return out;
}

Circle circle_through_three_points(cplx w1, cplx w2, cplx w3) {
  const double scale = std::max({1.0, std::abs(w1), std::abs(w2), std::abs(w3)});
  if (std::abs(w1 - w2) <= 1e-14 * scale || std::abs(w1 - w3) <= 1e-14 * scale ||
      std::abs(w2 - w3) <= 1e-14 * scale)
    throw DegenerateInputError("circle through three points: two points coincide");

  const cplx shift = (w1 + w2 + w3) / 3.0;
  const auto det = circle_determinants(w1 - shift, w2 - shift, w3 - shift);
  const double spread = std::max({std::abs(w1 - w2), std::abs(w1 - w3), std::abs(w2 - w3)});

  Circle c;
  if (std::abs(det.a) <= 1e-12 * spread * spread) {
    c.is_line = true;
    // Endpoints of the line description are the two farthest-apart points.
    if (std::abs(w1 - w2) == spread) {
      c.line_a = w1, c.line_b = w2;
    } else if (std::abs(w1 - w3) == spread) {
      c.line_a = w1, c.line_b = w3;
    } else {
      c.line_a = w2, c.line_b = w3;
    }
    return c;
  }
  const cplx k = det.d / (2.0 * det.a);
  const double r2 = std::norm(det.d) / (4.0 * det.a * det.a) - det.f / det.a;
  c.center = k + shift;
  c.radius = std::sqrt(std::max(r2, 0.0));
  return c;
}

Circle mobius_image_of_unit_disc(const RationalMap& m) {
  if (!m.is_mobius_shape()) throw ShapeError("mobius_image_of_unit_disc: map is not linear fractional");
  const double a = m.num().coeff(1), b = m.num().coeff(0);
  const double c = m.den().coeff(1), d = m.den().coeff(0);
  const double det = a * d - b * c;
  if (std::abs(det) <= 1e-14 * std::max({std::abs(a * d), std::abs(b * c), 1e-300}))
    throw DegenerateInputError("mobius_image_of_unit_disc: degenerate (constant) map");
  if (c != 0.0 && std::abs(d / c) <= 1.0 + 1e-12)
    throw PoleOnDiscError("mobius_image_of_unit_disc: pole on the closed unit disc");
  return circle_through_three_points(m(1.0), m(-1.0), m(cplx(0.0, 1.0)));
}

}  // namespace wco
