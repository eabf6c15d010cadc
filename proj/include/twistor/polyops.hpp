#pragma once

#include <optional>
#include <vector>

#include "twistor/multipoly.hpp"

namespace twistor {

class Rng;

// Quotient p/d when the division is exact, nullopt otherwise.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d);

// Greatest common divisor over Q(i)[vars], normalized monic in graded-lex.
// gcd(0,0) = 0; any nonzero constant input gives 1.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_gcd(const std::vector<MultiPoly>& polys);

// gcd of the coefficients of p viewed as a univariate polynomial in var.
MultiPoly content_in(const MultiPoly& p, const std::string& var);
MultiPoly primitive_part_in(const MultiPoly& p, const std::string& var);

// p / gcd(p, dp/dvar), monic. Same root set in var, squarefree in var.
MultiPoly squarefree_part(const MultiPoly& p, const std::string& var);

// Product of the distinct irreducible factors of p (char-0 radical), monic.
MultiPoly radical(const MultiPoly& p);

// Determinant by fraction-free (Bareiss) elimination; entries may be
// polynomials in any variables. Exact divisions are guaranteed by Sylvester's
// identity.
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m);

// Resultant of p and q with respect to var as the determinant of the
// Sylvester matrix with p's coefficient rows first. Requires positive degree
// in var on both sides (ZeroDegree otherwise).
MultiPoly sylvester_resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var);

// Number of distinct roots of a nonzero univariate polynomial over the
// algebraic closure: the degree of its squarefree part.
int distinct_root_count(const MultiPoly& p, const std::string& var);

}  // namespace twistor
