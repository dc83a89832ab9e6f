#pragma once

#include <optional>

#include "wco/certificates.hpp"
#include "wco/circle.hpp"

namespace wco {

/// γ(t, z) = (R1 t + R2) / (R3 t + R4) at a fixed z, with
/// R1 = [S]q, R2 = φ1(pφ2 + q), R3 = −[S]p, R4 = pφ2 + q.
struct TMobius {
  cplx r1, r2, r3, r4;
  bool constant_in_t = false;  // R1 R4 − R2 R3 = 0 to relative 1e-13
  // γ(0) = φ1(z) and γ(1) = φ2(z) when known; the quotients R2/R4 and
  // (R1 + R2)/(R3 + R4) cancel badly near the boundary.
  std::optional<cplx> end0, end1;

  cplx operator()(double t) const { return (r1 * t + r2) / (r3 * t + r4); }
};

TMobius t_mobius(const OperatorSpec& spec, cplx z);

/// Image γ([0, 1], z): a circular arc, a straight segment (R3 = 0 or
/// collinear images), or an unbounded set when the pole −R4/R3 lies in [0, 1].
struct Arc {
  cplx e0{}, e1{};
  Circle carrier;                // is_line for segments
  std::optional<cplx> excluded;  // γ(∞) = R1/R3 when R3 ≠ 0
  bool unbounded = false;
  double theta0 = 0.0;  // start angle about carrier.center (circle case)
  double sweep = 0.0;   // signed angular extent from e0 to e1
  double max_modulus = 0.0;

  /// For circle carriers: whether a point of the carrier lies on the closed arc.
  bool contains_angle(double theta) const;
  /// Point on the arc at fraction s ∈ [0, 1] of its angular (or linear) extent.
  cplx point_at(double s) const;
};

/// Throws DegenerateInputError for a constant-in-t map.
Arc arc_of_t(const TMobius& tm);

/// pass ⟺ every arc over zgrid has max_modulus <= 1 + 1e-12; margin = 1 − max_modulus.
Certificate selfmap_certificate_exact(const OperatorSpec& spec, const DiscGrid& zgrid);

}  // namespace wco
