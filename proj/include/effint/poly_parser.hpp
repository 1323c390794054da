#pragma once

#include <cstddef>
#include <string_view>

#include "effint/poly.hpp"

namespace effint {

// Parses a polynomial in x, y (arity 2) or x, y, z (arity 3).
//
//   expr     := sign? term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := rational | var | '(' expr ')'
//   rational := uint ('/' uint)?
//
// Whitespace is insignificant; implicit multiplication ("2x") is rejected.
// Throws SyntaxError (with byte offset), UnknownVariable or NegativeExponent.
Poly parse_poly(std::string_view text, std::size_t arity = 2);

}  // namespace effint
