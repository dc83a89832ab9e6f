#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wco/json_io.hpp"

namespace wco {

/// One compared cell (or group of cells) of a reproduced table.
struct TableCheck {
  int table = 0;
  std::string row;
  std::string column;
  double max_error = 0.0;
  bool pass = false;
  std::string note;
};

struct TablesReport {
  std::vector<TableCheck> checks;
  bool pass = true;
};

/// The reference table contents (tables 1, 2, 3, 5, 6 and 7) as JSON; table 4 is
/// symbolic and is checked against its formulas directly.
const json& default_golden();

/// Regenerates tables from the library and diffs them against `golden`;
/// a cell fails when its error exceeds `tol`. `only` restricts to one table.
TablesReport run_tables(const json& golden, std::optional<int> only = std::nullopt, double tol = 1e-10);

json to_json(const TablesReport& r);

/// Σ c[i][j] t^i z^j for a nested coefficient array.
cplx eval_tz(const json& coeffs, double t, cplx z);
/// Ratio of two eval_tz arrays stored as {"num": ..., "den": ...}.
cplx eval_tz_ratio(const json& ratio, double t, cplx z);

}  // namespace wco
