#include "wco/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "wco/errors.hpp"

namespace wco {

namespace {

std::vector<double> real_array(const json& j, const char* what) {
  if (j.is_number()) return {j.get<double>()};
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& x : j) {
    if (!x.is_number()) throw ParseError(std::string(what) + ": expected an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

// JSON cannot carry inf/nan; they become null.
json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

json to_json(cplx z) { return json::array({number(z.real()), number(z.imag())}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ParseError("expected a number or a [re, im] pair");
}

json to_json(const RationalMap& r) { return {{"num", r.num().coeffs()}, {"den", r.den().coeffs()}}; }

RationalMap rational_from_json(const json& j) {
  try {
    if (j.is_number() || j.is_array()) return RationalMap(Polynomial(real_array(j, "polynomial")));
    const auto num = real_array(field(j, "num"), "num");
    const auto den = j.contains("den") ? real_array(j.at("den"), "den") : std::vector<double>{1.0};
    return RationalMap(Polynomial(num), Polynomial(den));
  } catch (const DomainError& e) {
    throw ParseError(std::string("rational map: ") + e.what());
  }
}

json to_json(const AnalyticMap& m) {
  if (!m.has_exp()) return to_json(m.factor());
  return {{"builtin", "exp"}, {"scale", to_json(m.factor())}};
}

AnalyticMap analytic_from_json(const json& j) {
  if (j.is_object() && j.contains("builtin")) {
    if (j.at("builtin") != "exp") throw ParseError("unknown builtin map (only \"exp\" is supported)");
    const RationalMap scale = j.contains("scale") ? rational_from_json(j.at("scale")) : RationalMap::constant(1.0);
    return AnalyticMap(scale, true);
  }
  return AnalyticMap(rational_from_json(j));
}

json to_json(const OperatorSpec& spec) {
  return {{"phi1", to_json(spec.phi1())}, {"phi2", to_json(spec.phi2())}, {"p", to_json(spec.p())},
          {"q", to_json(spec.q())}};
}

OperatorSpec spec_from_json(const json& j) {
  return OperatorSpec(rational_from_json(field(j, "phi1")), rational_from_json(field(j, "phi2")),
                      analytic_from_json(field(j, "p")), analytic_from_json(field(j, "q")));
}

OperatorSpec load_spec_file(const std::string& path) { return spec_from_json(read_json_file(path)); }

json to_json(const GeneratorInput& gin) {
  return {{"phi1", to_json(gin.phi1())}, {"phi2", to_json(gin.phi2())}, {"p", to_json(gin.p())},
          {"omega", to_json(gin.omega())}};
}

GeneratorInput generator_from_json(const json& j) {
  return GeneratorInput(rational_from_json(field(j, "phi1")), rational_from_json(field(j, "phi2")),
                        analytic_from_json(field(j, "p")), rational_from_json(field(j, "omega")));
}

json to_json(const AnalyticSeries& f) {
  json arr = json::array();
  for (const cplx c : f.coeffs) arr.push_back(to_json(c));
  return {{"coeffs", arr}};
}

AnalyticSeries series_from_json(const json& j) {
  const json& arr = j.is_object() ? field(j, "coeffs") : j;
  if (!arr.is_array()) throw ParseError("series: expected an array of coefficients");
  AnalyticSeries f;
  for (const auto& c : arr) f.coeffs.push_back(complex_from_json(c));
  return f;
}

json to_json(const Witness& w) {
  json j = {{"z", to_json(w.z)}, {"margin", number(w.margin)}};
  if (w.t) j["t"] = *w.t;
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

json to_json(const Certificate& c) {
  json ws = json::array();
  for (const auto& w : c.witnesses) ws.push_back(to_json(w));
  return {{"kind", to_string(c.kind)}, {"pass", c.pass},         {"witnesses", ws},
          {"nodes", c.nodes},          {"failures", c.failures}, {"min_margin", number(c.min_margin)},
          {"grid", c.grid}};
}

json to_json(const KernelPair& k) {
  return {{"w", to_json(k.w)},
          {"gamma", to_json(k.gamma)},
          {"gamma_dt", to_json(k.gamma_dt)},
          {"gamma_dz", to_json(k.gamma_dz)},
          {"w_dz", to_json(k.w_dz)}};
}

json to_json(const DenseMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(number(m(i, j)));
    rows.push_back(row);
  }
  return {{"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

json to_json(const BoundReport& r) {
  json conv = {{"levels", r.integral.levels},
               {"last_change", number(r.integral.last_change)},
               {"converged", r.integral.converged},
               {"divergent", r.integral.divergent}};
  if (!r.integral.divergent_end.empty()) conv["divergent_end"] = r.integral.divergent_end;
  return {{"alpha", r.alpha},
          {"conditions", r.conditions},
          {"delta_integrable", r.delta_integrable},
          {"prop4_bound", r.bound_value ? json(*r.bound_value) : json(nullptr)},
          {"theorem3_bound", r.theorem3_value ? json(*r.theorem3_value) : json(nullptr)},
          {"convergence", conv}};
}

std::string to_csv(const DenseMatrix& m) {
  std::ostringstream os;
  os.precision(17);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) os << (j ? "," : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

}  // namespace wco
