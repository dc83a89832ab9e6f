#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wco/operator_spec.hpp"

namespace wco {

struct DiscGrid {
  std::vector<cplx> points;
  int radii = 0;
  int angles = 0;
  double rmax = 0.0;

  /// Polar grid: radii rmax·i/(radii−1), i = 0..radii−1, each with `angles`
  /// equally spaced angles; the origin appears once.
  static DiscGrid polar(int radii, int angles, double rmax = 1.0 - 1e-6);
};

/// t_j = j / (n + 1), j = 1..n: interior nodes of (0, 1).
std::vector<double> interior_t_grid(int n);

enum class CertificateKind { well_defined, selfmap_sampled, selfmap_arc, prop4_conditions, generated };

const char* to_string(CertificateKind kind);

struct Witness {
  std::optional<double> t;
  cplx z{};
  double margin = 0.0;
  std::string note;
};

/// Outcome of a grid check. A failing certificate always holds at least one
/// witness with negative margin; witnesses are the most negative failures
/// (at most kMaxWitnesses of them).
struct Certificate {
  static constexpr std::size_t kMaxWitnesses = 32;

  CertificateKind kind{};
  bool pass = true;
  std::vector<Witness> witnesses;
  std::size_t nodes = 0;
  std::size_t failures = 0;
  double min_margin = 0.0;
  std::string grid;

  /// Records one node; keeps the worst failures.
  void record(const Witness& w, bool ok);
};

Certificate well_defined_certificate(const OperatorSpec& spec, const DiscGrid& grid);

/// Condition |φ1φ2p + (φ1 + t[S])q| < |(φ2 − t[S])p + q| on tgrid × zgrid;
/// margin = RHS − LHS.
Certificate selfmap_condition_sampled(const OperatorSpec& spec, const std::vector<double>& tgrid,
                                      const DiscGrid& zgrid);

}  // namespace wco
