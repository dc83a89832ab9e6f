#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wco/generator.hpp"
#include "wco/matrix.hpp"
#include "wco/operator_spec.hpp"

namespace wco {

/// Named operators: cesaro, adjoint-cesaro, j, hilbert, reduced-hilbert,
/// and the negative control modified-cesaro (Cesàro with q = 1/2).
/// Throws SpecError for an unknown name.
OperatorSpec preset_spec(const std::string& name);
std::vector<std::string> preset_names();
/// The five operators of the first table, in table order.
std::vector<std::string> named_operator_presets();

/// table6-case1 ... table6-case6.
GeneratorInput generator_preset(const std::string& name);
std::vector<std::string> generator_preset_names();

/// Matrix families: hilbert and reduced-hilbert (M1), cesaro (M2).
MatrixFamily matrix_preset(const std::string& name);

}  // namespace wco
