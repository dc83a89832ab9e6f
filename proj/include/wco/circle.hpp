#pragma once

#include "wco/rational_map.hpp"

namespace wco {

/// A circle, or (when `is_line`) the line through `line_a` and `line_b`.
struct Circle {
  cplx center{};
  double radius = 0.0;
  bool is_line = false;
  cplx line_a{};
  cplx line_b{};
};

/// Unique circle through three pairwise distinct points, built from the
/// three-point determinants a, d (complex) and f:
///   K = d / (2a),  r = sqrt(|d|^2 / (4a^2) - f / a).
/// Collinear points give a line. Throws DegenerateInputError when two points
/// coincide within 1e-14.
Circle circle_through_three_points(cplx w1, cplx w2, cplx w3);

/// The determinants above, exposed for testing (evaluated on the raw points).
struct CircleDeterminants {
  double a;
  cplx d;
  double f;
};
CircleDeterminants circle_determinants(cplx w1, cplx w2, cplx w3);

/// Image of the unit disc under a Möbius map with no pole on the closed disc.
Circle mobius_image_of_unit_disc(const RationalMap& m);

}  // namespace wco
