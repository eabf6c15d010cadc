#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "twistor/grassmann.hpp"
#include "twistor/multipoly.hpp"
#include "twistor/sampling.hpp"
#include "twistor/slice_lift.hpp"

namespace twistor {

inline const std::vector<std::string> kSurfaceVars = {"z0", "z1", "z2", "z3"};

// A single homogeneous equation F(z0..z3) cutting out the swept surface,
// monic in graded-lex, with the cleanup trail and construction provenance.
// Construction validates F against its source parametrization: F evaluates to
// exactly zero on random parameter samples.
struct ImplicitSurface {
  MultiPoly f;
  int degree = 0;
  std::string construction;                    // "slice" or "grassmann"
  std::map<std::string, std::string> inputs;   // expression strings
  std::vector<std::string> cleanup;
  std::uint64_t seed = 0;
};

// Eliminates v from the chart equations
//   P1 = z0*g(v) - z1*h_hat(v) - z2,  P2 = z0*h(v) + z1*g_hat(v) - z3
// by a Sylvester resultant, then removes multiplicities. Degree <= 2m.
ImplicitSurface implicitize_slice(const SlicePair& pair, std::uint64_t seed = 0,
                                  int validation_samples = 100);

// Eliminates w from pairs of 3x3 minors of [z | A(w) | B(w)], accumulating
// the gcd across pairs to cancel chart-dependent extraneous factors.
ImplicitSurface implicitize_ruled(const LineFamily& family, std::uint64_t seed = 0,
                                  int validation_samples = 100);

// Exact membership of random parameter images in {F = 0}.
bool membership_check(const ImplicitSurface& surface, const SlicePair& pair, int samples,
                      Rng& rng);
bool membership_check(const ImplicitSurface& surface, const LineFamily& family, int samples,
                      Rng& rng);

// The four 3x3 minors of [z | A(w) | B(w)] (linear in z), used by the ruled
// route and exposed for the symbolic consistency checks.
std::array<MultiPoly, 4> ruling_minors(const LineFamily& family);

}  // namespace twistor
