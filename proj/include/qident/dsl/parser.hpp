#pragma once

#include <string_view>

#include "qident/dsl/ast.hpp"

namespace qident::dsl {

/// Parses a q-series expression; throws SyntaxError with line and column.
ExprPtr parse(std::string_view text);

/// Parses a bare integer expression such as `n*(n+1)/2`.
IntExprPtr parse_int_expr(std::string_view text);

}  // namespace qident::dsl
