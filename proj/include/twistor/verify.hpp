#pragma once

#include <optional>
#include <vector>

#include "twistor/fibration.hpp"
#include "twistor/implicitize.hpp"

namespace twistor {

struct JInvariance {
  bool holds = false;
  GaussianRational lambda;  // meaningful only when holds
};

// Tests whether {F = 0} is carried to itself by the involution j: computes
// G(z) = conj-coefficients(F)(-z1, z0, -z3, z2) and decides G = lambda*F by
// exact coefficient proportionality.
JInvariance j_invariance(const MultiPoly& f);

// Substitutes s*A + u*B into F and expands in (s, u); true when every
// coefficient vanishes, i.e. the whole line lies on the surface.
bool line_on_surface(const MultiPoly& f, const Line3& line);

// Modal number of parameters v mapping to one surface point, over 10 random
// points: the degree of the squarefree part of gcd_v of the specialized chart
// equations. Count 1 reports a generically injective parametrization.
int generic_fiber_count(const SlicePair& pair, std::uint64_t seed);

struct FiberSample {
  GaussianRational parameter;  // real for the certified family
  TwistorCertificate cert;
  bool on_surface = false;
};

// Aggregate verification record for one constructed surface.
struct Certificate {
  int degree = 0;
  bool parity_ok = false;
  JInvariance j;
  std::vector<FiberSample> fibers;
  bool fibers_ok = false;
  std::optional<int> fiber_count;  // absent = not probed
  std::uint64_t seed = 0;
  std::string construction;
  std::map<std::string, std::string> inputs;

  bool all_pass() const { return parity_ok && j.holds && fibers_ok; }
};

Certificate surface_report(const ImplicitSurface& surface, const SlicePair& pair, int samples,
                           std::uint64_t seed);
Certificate surface_report(const ImplicitSurface& surface, const LineFamily& family, int samples,
                           std::uint64_t seed);

}  // namespace twistor
