#include "wco/presets.hpp"

#include "wco/errors.hpp"

namespace wco {

namespace {

RationalMap c(double v) { return RationalMap::constant(v); }
RationalMap z() { return RationalMap::identity(); }
RationalMap poly(std::initializer_list<double> coeffs) { return RationalMap(Polynomial(coeffs)); }

}  // namespace

std::vector<std::string> named_operator_presets() {
  return {"cesaro", "adjoint-cesaro", "j", "hilbert", "reduced-hilbert"};
}

std::vector<std::string> preset_names() {
  auto names = named_operator_presets();
  names.push_back("modified-cesaro");
  return names;
}

OperatorSpec preset_spec(const std::string& name) {
  if (name == "cesaro") return OperatorSpec(c(0), z(), c(-1), c(1));
  if (name == "adjoint-cesaro") return OperatorSpec(c(1), z(), c(0), c(1));
  if (name == "j") return OperatorSpec(c(1), z(), c(-1), c(-1));
  if (name == "hilbert") return OperatorSpec(c(0), c(1), poly({0, -1}), c(1));
  if (name == "reduced-hilbert") return OperatorSpec(c(-1), c(1), poly({0, -1}), c(1));
  if (name == "modified-cesaro") return OperatorSpec(c(0), z(), c(-1), c(0.5));
  throw SpecError("unknown preset: " + name);
}

std::vector<std::string> generator_preset_names() {
  std::vector<std::string> out;
  for (int k = 1; k <= 6; ++k) out.push_back("table6-case" + std::to_string(k));
  return out;
}

GeneratorInput generator_preset(const std::string& name) {
  const RationalMap third = RationalMap::mobius(1.0 / 3.0, 0.0, 0.0, 1.0);
  if (name == "table6-case1") return GeneratorInput(c(-1), c(1), poly({0, 2}), third);
  if (name == "table6-case2") return GeneratorInput(c(-1), c(1), AnalyticMap::exp(), third);
  if (name == "table6-case3") return GeneratorInput(c(0), z(), poly({1, -1, 1, 1}), third);
  if (name == "table6-case4") return GeneratorInput(c(0), z(), poly({2, -1, 0, 1}), poly({0, 0, 0, 1.0 / 3.0}));
  if (name == "table6-case5")
    return GeneratorInput(c(0), z(), poly({0, 1}), RationalMap::mobius(1.0 / 3.0, -1.0 / 6.0, 0.5, -1.0));
  if (name == "table6-case6")
    return GeneratorInput(c(0), RationalMap::mobius(2, -1, 1, -2), poly({0, 1}), RationalMap::mobius(0.25, 0, 0, 1));
  throw SpecError("unknown generator preset: " + name);
}

MatrixFamily matrix_preset(const std::string& name) {
  if (name == "hilbert") return M1Params{-1, 1, 0, 1};
  if (name == "reduced-hilbert") return M1Params{-1, 1, -1, 1};
  if (name == "cesaro") return M2Params{-1, 1, 0, 1};
  throw SpecError("unknown matrix preset: " + name);
}

}  // namespace wco
