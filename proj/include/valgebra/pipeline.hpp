#pragma once

#include "valgebra/composition.hpp"
#include "valgebra/model_io.hpp"

namespace valgebra {

/// Evaluates a pipeline expression over the names of a model file.
///
/// Grammar (left associative, single precedence level, parentheses group):
///   expr    := operand (op operand)*
///   op      := '*' combine | '@' project | '|' condition | '>' compose
///   operand := name | unit(<domain>) | '(' expr ')' | <domain literal after @ and |>
///
/// Results are density elements: members render as valuations, everything
/// else as a num/den pair.
DensityElement eval_pipeline(const ModelFile& model, const std::string& expression);

std::string render_element(const DensityElement& e, bool compact = false);

} // namespace valgebra
