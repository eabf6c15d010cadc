#pragma once

#include <optional>
#include <utility>

#include "twistor/projective.hpp"
#include "twistor/quaternion.hpp"

namespace twistor {

// Verification record for the twistor-line predicate. A line is a twistor
// line exactly when its Plücker point is fixed by j_grassmann (up to scalar).
struct TwistorCertificate {
  PlueckerPoint pluecker;
  bool is_twistor;
  // Proportionality scalar with j_grassmann(t) = lambda * t, when fixed.
  std::optional<GaussianRational> lambda;
  // First violating 2x2 minor (i, j) of the stacked pair, when not fixed.
  std::optional<std::pair<std::size_t, std::size_t>> violating_minor;
  // Rescaled lift with j_grassmann(n) = n exactly (t1, t6 real, t5 = conj t2,
  // t4 = -conj t3), when a Gaussian-rational rescaling exists.
  std::optional<Vec6> normal_form;
};

// The twistor projection CP^3 -> HP^1, [z0,z1,z2,z3] -> [z0+z1*j, z2+z3*j],
// returned in canonical form.
HPoint twistor_project(const ProjPoint& z);

// The fiber of the twistor projection through z: span(z, j(z)).
Line3 fiber_through(const ProjPoint& z);

// The fiber over a point of HP^1, realized by decomposing q0 = a + b*j,
// q1 = c + d*j and passing the fiber through the seed (a, b, c, d).
Line3 fiber_over(const HPoint& q);

TwistorCertificate is_twistor_line(const PlueckerPoint& t);

}  // namespace twistor
