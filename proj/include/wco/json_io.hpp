#pragma once

#include <string>

#include "json.hpp"
#include "wco/bounds.hpp"
#include "wco/certificates.hpp"
#include "wco/generator.hpp"
#include "wco/matrix.hpp"
#include "wco/operator_spec.hpp"
#include "wco/series.hpp"

namespace wco {

using json = nlohmann::json;

// Every parser throws ParseError on malformed input.

json to_json(cplx z);
cplx complex_from_json(const json& j);  // number or [re, im]

/// {"num": [...], "den": [...]}; a bare number or array is accepted as a polynomial.
json to_json(const RationalMap& r);
RationalMap rational_from_json(const json& j);

/// A rational map, or {"builtin": "exp", "scale": R} for R·e^z.
json to_json(const AnalyticMap& m);
AnalyticMap analytic_from_json(const json& j);

/// {"phi1", "phi2", "p", "q"}.
json to_json(const OperatorSpec& spec);
OperatorSpec spec_from_json(const json& j);
OperatorSpec load_spec_file(const std::string& path);

/// {"phi1", "phi2", "p", "omega"}.
json to_json(const GeneratorInput& gin);
GeneratorInput generator_from_json(const json& j);

/// {"coeffs": [[re, im], ...]}; a bare array of numbers or pairs is accepted.
json to_json(const AnalyticSeries& f);
AnalyticSeries series_from_json(const json& j);

json to_json(const Witness& w);
json to_json(const Certificate& c);
json to_json(const KernelPair& k);
json to_json(const DenseMatrix& m);
json to_json(const BoundReport& r);

/// Row-major CSV, one matrix row per line, 17 significant digits.
std::string to_csv(const DenseMatrix& m);

json parse_json(const std::string& text);
json read_json_file(const std::string& path);

}  // namespace wco
