#include <fstream>

#include "doctest.h"
#include "wco/errors.hpp"
#include "wco/json_io.hpp"
#include "wco/presets.hpp"

using namespace wco;

TEST_CASE("complex and rational round trips") {
  CHECK(complex_from_json(json::parse("[1.5, -2]")) == cplx(1.5, -2));
  CHECK(complex_from_json(json(3.0)) == cplx(3.0));
  CHECK(complex_from_json(to_json(cplx(0.25, 4))) == cplx(0.25, 4));
  const RationalMap r = RationalMap::mobius(2, 1, 1, 3);
  CHECK(same_map(rational_from_json(to_json(r)), r));
  CHECK(same_map(rational_from_json(json::parse("[0, 1]")), RationalMap::identity()));
  CHECK(same_map(rational_from_json(json(0.5)), RationalMap::constant(0.5)));
}

TEST_CASE("analytic maps") {
  const AnalyticMap e = analytic_from_json(json::parse(R"({"builtin": "exp", "scale": 2})"));
  CHECK(e.has_exp());
  CHECK(std::abs(e(0.0) - 2.0) < 1e-15);
  const AnalyticMap back = analytic_from_json(to_json(e));
  CHECK(back.has_exp());
  CHECK_THROWS_AS(analytic_from_json(json::parse(R"({"builtin": "sin"})")), ParseError);
}

TEST_CASE("operator specs") {
  for (const auto& name : preset_names()) {
    const OperatorSpec s = preset_spec(name);
    const OperatorSpec t = spec_from_json(to_json(s));
    CHECK(same_map(s.phi1(), t.phi1()));
    CHECK(same_map(s.phi2(), t.phi2()));
    CHECK(same_map(s.p().factor(), t.p().factor()));
    CHECK(same_map(s.q().factor(), t.q().factor()));
  }
  const OperatorSpec mod = load_spec_file(WCO_FIXTURES "/modified_cesaro.json");
  CHECK(std::abs(mod.q()(0.0) - 0.5) < 1e-16);
  CHECK_THROWS_AS(spec_from_json(json::parse(R"({"phi1": 0})")), ParseError);
  CHECK_THROWS_AS(spec_from_json(json::parse(R"({"phi1": 0, "phi2": [0, 1], "p": "x", "q": 1})")), ParseError);
  CHECK_THROWS_AS(spec_from_json(json::parse(R"({"phi1": 0, "phi2": 0, "p": 1, "q": 1})")), SpecError);
  CHECK_THROWS_AS(load_spec_file("/nonexistent/spec.json"), ParseError);
  CHECK_THROWS_AS(parse_json("{not json"), ParseError);
}

TEST_CASE("generator inputs and series") {
  const GeneratorInput g = generator_from_json(to_json(generator_preset("table6-case5")));
  CHECK(same_map(g.omega(), generator_preset("table6-case5").omega()));
  const AnalyticSeries f = series_from_json(json::parse("[1, [0, 2]]"));
  REQUIRE(f.size() == 2);
  CHECK(f.coeffs[1] == cplx(0, 2));
  CHECK(series_from_json(to_json(f)).coeffs == f.coeffs);
}

TEST_CASE("matrix output") {
  DenseMatrix m(2, 2);
  m(0, 0) = 1.0 / 3.0;
  m(1, 1) = -2;
  const std::string csv = to_csv(m);
  CHECK(csv.find("0.33333333333333331") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
  const json j = to_json(m);
  CHECK(j.dump().find("-2") != std::string::npos);
}

TEST_CASE("certificates serialise their witnesses") {
  Certificate c;
  c.kind = CertificateKind::well_defined;
  c.record({0.5, cplx(0.1, 0.2), -1.0, "bad"}, false);
  const json j = to_json(c);
  CHECK(j.at("pass") == false);
  CHECK(j.at("witnesses").size() == 1);
  CHECK(j.at("witnesses")[0].at("note") == "bad");
}
