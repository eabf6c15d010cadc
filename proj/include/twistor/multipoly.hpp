#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "twistor/rational.hpp"

namespace twistor {

using ExpVec = std::vector<std::uint32_t>;

// Graded lexicographic order: total degree first, then lexicographic with the
// first (alphabetically smallest) variable most significant.
struct GradedLexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate polynomial over GaussianRational.
//
// Canonical form invariants:
//   - variable list sorted, unique, and minimal (every listed variable occurs
//     with positive exponent in some term)
//   - no zero coefficients stored
//   - all exponent vectors have length == number of variables
class MultiPoly {
 public:
  using TermMap = std::map<ExpVec, GaussianRational, GradedLexLess>;

  MultiPoly() = default;  // zero polynomial

  static MultiPoly constant(GaussianRational c);
  static MultiPoly variable(const std::string& name);
  // Coefficient times a single variable power.
  static MultiPoly monomial(const std::string& name, std::uint32_t power,
                            GaussianRational coeff = GaussianRational(1));
  // General constructor; canonicalizes (sorts variables, drops zeros/unused).
  static MultiPoly from_terms(std::vector<std::string> vars, TermMap terms);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  // Value of a constant polynomial (zero polynomial gives 0).
  GaussianRational constant_value() const;

  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(const std::string& var) const;
  bool is_homogeneous() const;
  bool uses_variable(const std::string& var) const;

  // Leading term in graded-lex order.
  const GaussianRational& leading_coefficient() const;
  const ExpVec& leading_exponents() const;
  MultiPoly monic() const;

  MultiPoly conj_coefficients() const;
  MultiPoly derivative(const std::string& var) const;

  GaussianRational eval(const std::map<std::string, GaussianRational>& point) const;
  // Partial evaluation: plugs in the given variables, keeps the rest.
  MultiPoly specialize(const std::map<std::string, GaussianRational>& point) const;
  // Polynomial composition: replaces each mapped variable by its image.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& images) const;
  MultiPoly homogenize(const std::string& var, const std::string& new_var,
                       std::uint32_t degree) const;

  // Univariate view: coefficients_in(var)[k] is the coefficient of var^k, a
  // polynomial in the remaining variables. Size is degree_in(var)+1 (empty for
  // the zero polynomial).
  std::vector<MultiPoly> coefficients_in(const std::string& var) const;
  static MultiPoly from_coefficients_in(const std::string& var,
                                        const std::vector<MultiPoly>& coeffs);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const GaussianRational& c);
  friend MultiPoly operator*(const GaussianRational& c, const MultiPoly& a) { return a * c; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // String form like "v^2 + 1/2*i*v - 3" (re-parsable by the expression
  // grammar when at most one variable is present).
  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  TermMap terms_;

  void canonicalize();
  // Remaps this polynomial's terms onto a superset variable list.
  TermMap remapped_terms(const std::vector<std::string>& target_vars) const;
  friend std::vector<std::string> merged_vars(const MultiPoly& a, const MultiPoly& b);
};

MultiPoly pow(const MultiPoly& base, std::uint32_t n);

// Equality up to a nonzero scalar.
bool proportional(const MultiPoly& a, const MultiPoly& b);

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace twistor
