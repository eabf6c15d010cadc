#pragma once

#include <array>
#include <string>
#include <utility>

#include "twistor/multipoly.hpp"
#include "twistor/projective.hpp"
#include "twistor/sampling.hpp"

namespace twistor {

inline constexpr const char* kCurveVar = "w";

// Rational curve on the quadric E = {t1*t6 = t4^2 + t5^2} inside the
// sigma-fixed linear space F = {t2 = t5, t3 = -t4}: for real polynomials
// f4, f5 the six coordinates are
//   t(w) = (f4^2 + f5^2, f5, -f4, f4, f5, 1).
// Membership in F, E and the Plücker relation hold identically in w.
struct ECurve {
  MultiPoly f4, f5;
  std::array<MultiPoly, 6> t;
};

// NonRealCoefficients for complex input, BothConstant when deg f4 = deg f5 = 0.
ECurve e_curve(MultiPoly f4, MultiPoly f5);

Vec6 e_curve_at(const ECurve& curve, const GaussianRational& w);

// The ruling realized polynomially: two columns of the antisymmetric matrix
// M(w) built from t(w), chosen generically independent, with column content
// removed. The excluded parameters (finitely many w where the pair collapses)
// are the roots of pair_pluecker = M[columns.first][columns.second].
struct LineFamily {
  ECurve curve;
  std::array<MultiPoly, 4> a, b;
  std::pair<std::size_t, std::size_t> columns;
  MultiPoly pair_pluecker;
};

// RankCollapse when no column pair is generically independent.
LineFamily line_family(const ECurve& curve, Rng& rng);

// The member line at a parameter value (DependentPoints at excluded w).
Line3 family_line_at(const LineFamily& family, const GaussianRational& w);

// True when the parametrization w -> t(w) is generically injective. Combines
// `trials` random proportionality samples with an exact criterion: the
// pairwise minors of t(w1), t(w2), divided by (w1 - w2), must have constant
// gcd, otherwise a positive-dimensional collision locus exists (for even
// inputs, for instance, t(w) = t(-w) and the probe reports false).
bool injectivity_probe(const ECurve& curve, int trials, Rng& rng);

}  // namespace twistor
