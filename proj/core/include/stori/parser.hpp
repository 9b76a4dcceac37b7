#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "stori/formula.hpp"
#include "stori/variables.hpp"

namespace stori {

struct ParseResult {
    Formula formula;
    VariableMap variables;  // binding in effect (given or auto-derived)
};

/// Parses the concrete formula syntax
///
///   formula := 'T' | atom | '!' formula | formula '&' formula
///            | formula '->' formula | formula 'U' interval formula
///            | 'F' interval formula | 'G' interval formula | '(' formula ')'
///   atom    := var ('>=' | '<=') number
///   interval:= ('[' | '(') number ',' number (']' | ')')
///
/// Precedence, tightest first: unary (!, F_I, G_I), then &, then ->, then U.
/// '&' associates left, '->' and 'U' associate right.  'a -> b' desugars to
/// '!(a & !b)', 'F_I p' to 'T U_I p' and 'G_I p' to '!F_I !p'.
/// 'T', 'U', 'F' and 'G' are reserved words and cannot name variables.
///
/// When `variables` is given, every identifier must be bound in it and the
/// predicate dimension is its state_dim; otherwise identifiers auto-bind to
/// indices 0,1,... in order of first appearance.
///
/// Throws ParseError (with 1-based line/column) on syntax errors, unbound
/// variables and malformed intervals.
ParseResult parse_formula(std::string_view text,
                          const std::optional<VariableMap>& variables = std::nullopt);

}  // namespace stori
