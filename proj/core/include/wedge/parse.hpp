#pragma once

#include <string>

#include "wedge/freepoly.hpp"
#include "wedge/grassmann.hpp"

namespace wedge {

/// Polynomial grammar: variables `x1 x2 ...`, integer (or integer/integer)
/// coefficients, `+ - * ^`, nestable variadic commutators `[f,g,...]`
/// (comma-separated arguments combine left-normed), parentheses.
/// Example: `[x1,x2]*x1^2*x2^2 + 3*x3`.
FreePoly parse_poly(const std::string& text, Characteristic ch, bool unitary);

/// Grassmann element grammar: generators `e1 e2 ...`, same scalar literals
/// and operators, the unit written `1` (unitary contexts only).
/// Example: `e1*e2 + 3*e4`.
GrassmannElement parse_element(const std::string& text, Characteristic ch, bool unitary,
                               uint32_t truncation);

}  // namespace wedge
