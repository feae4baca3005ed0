#pragma once

#include "qtr/form.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qtr {

/// Parses the polynomial grammar: variables x0 x1 x2, the cyclotomic
/// generator z, integer literals, a/b rationals, + - * ^ and parentheses.
/// Implicit multiplication is rejected.
///
/// Throws SyntaxError or NonHomogeneous. Using z over Q (order 1) is legal
/// but z then equals 1; a note is appended to `warnings` when given.
Form parse_form(std::string_view text, int order, std::vector<std::string>* warnings = nullptr);

/// Parses a degree-0 expression; throws InvalidInput for nonconstant text.
Scalar parse_scalar(std::string_view text, int order, std::vector<std::string>* warnings = nullptr);

}  // namespace qtr
