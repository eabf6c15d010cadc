#pragma once

#include <string>

#include "twistor/multipoly.hpp"

namespace twistor {

// Parses a polynomial expression in one declared variable over the Gaussian
// rationals. Grammar: integer and rational literals ("3", "1/2"), the
// imaginary unit "i", the declared variable, operators + - * ^ with the usual
// precedence, parentheses; whitespace insignificant; "^" takes nonnegative
// integer exponents. There is no division operator; "/" only joins two
// integer literals.
//
// Errors: SyntaxError with a character position; WrongVariable when an
// identifier other than "i" and the declared variable appears.
MultiPoly parse_poly(const std::string& src, const std::string& var);

// Constants-only form (any identifier but "i" is rejected).
GaussianRational parse_complex_constant(const std::string& src);

// Expression string that re-parses to an equal polynomial.
std::string render_poly(const MultiPoly& p);

}  // namespace twistor
