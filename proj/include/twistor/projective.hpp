#pragma once

#include <array>
#include <ostream>
#include <vector>

#include "twistor/rational.hpp"

namespace twistor {

using Vec6 = std::array<GaussianRational, 6>;

// Point of complex projective space in homogeneous coordinates (at least one
// coordinate nonzero). Equality is proportionality, tested exactly by the
// vanishing of all 2x2 minors of the stacked pair, so zero coordinates need
// no special casing.
struct ProjPoint {
  std::vector<GaussianRational> coords;

  explicit ProjPoint(std::vector<GaussianRational> c);
  ProjPoint(GaussianRational z0, GaussianRational z1, GaussianRational z2, GaussianRational z3);

  std::size_t dim() const { return coords.size(); }
  const GaussianRational& operator[](std::size_t k) const { return coords[k]; }

  ProjPoint conj() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return proportional_coords(a.coords, b.coords);
  }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

  static bool proportional_coords(const std::vector<GaussianRational>& a,
                                  const std::vector<GaussianRational>& b);
};

std::ostream& operator<<(std::ostream& os, const ProjPoint& p);

// Line in CP^3 as a spanning pair of independent points.
struct Line3 {
  ProjPoint a, b;

  Line3(ProjPoint a_, ProjPoint b_);

  // Point s*a + u*b of the line.
  ProjPoint at(const GaussianRational& s, const GaussianRational& u) const;

  // Equality of column spans, via Plücker proportionality.
  friend bool operator==(const Line3& x, const Line3& y);
  friend bool operator!=(const Line3& x, const Line3& y) { return !(x == y); }
};

// Point of the Plücker quadric Gr(2,4) in CP^5. The defining relation for the
// wedge labeling t1=p01, t2=p02, t3=p03, t4=p12, t5=p13, t6=p23 is
// t1*t6 - t2*t5 + t3*t4 = 0.
struct PlueckerPoint {
  Vec6 t;

  explicit PlueckerPoint(Vec6 t_);

  const GaussianRational& operator[](std::size_t k) const { return t[k]; }

  friend bool operator==(const PlueckerPoint& a, const PlueckerPoint& b) {
    return proportional6(a.t, b.t);
  }
  friend bool operator!=(const PlueckerPoint& a, const PlueckerPoint& b) { return !(a == b); }

  static bool proportional6(const Vec6& a, const Vec6& b);
};

std::ostream& operator<<(std::ostream& os, const PlueckerPoint& p);

// t1*t6 - t2*t5 + t3*t4.
GaussianRational pluecker_relation(const Vec6& t);

PlueckerPoint pluecker_embed(const Line3& line);
Line3 pluecker_extract(const PlueckerPoint& p);

// The fixed-point-free anti-holomorphic involution of CP^3:
// (z0,z1,z2,z3) -> (-conj z1, conj z0, -conj z3, conj z2).
ProjPoint j_involution(const ProjPoint& z);

// Its holomorphic linear part: (z0,z1,z2,z3) -> (-z1, z0, -z3, z2).
ProjPoint sigma_cp3(const ProjPoint& z);

// Holomorphic linear involution of CP^5: (t1,...,t6) -> (t1,t5,-t4,-t3,t2,t6).
Vec6 sigma_cp5(const Vec6& t);

// Induced involution on Gr(2,4): coordinatewise conjugation composed with
// sigma_cp5 (in either order). Input must satisfy the Plücker relation.
PlueckerPoint j_grassmann(const PlueckerPoint& p);

}  // namespace twistor
