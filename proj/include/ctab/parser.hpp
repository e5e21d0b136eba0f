#pragma once

#include <string_view>

#include "ctab/formula.hpp"

namespace ctab {

/// Parses a query in the conjunctive calculus grammar:
///
///   formula := "exists" var { "," var } "." formula | conj
///   conj    := atom { "&" atom }
///   atom    := "true" | "false" | var "=" var
///            | ident "(" var { "," var } ")" | "(" formula ")"
///
/// "exists" binds weakest and "&" is left-associative. Identifiers match
/// [A-Za-z_][A-Za-z0-9_]*; whatever appears in variable position is a
/// variable. Throws ParseError with a 1-based line:column position.
Formula parse_formula(std::string_view src);

}  // namespace ctab
