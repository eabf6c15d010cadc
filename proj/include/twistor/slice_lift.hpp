#pragma once

#include <array>
#include <cstdint>

#include "twistor/multipoly.hpp"
#include "twistor/projective.hpp"

namespace twistor {

// Variable conventions for the slice construction: the slice polynomials g, h
// live in kSliceVar; the lift is bihomogeneous in (kLiftS, kLiftU) x
// (kLiftV0, kLiftV1).
inline constexpr const char* kSliceVar = "v";
inline constexpr const char* kLiftS = "s";
inline constexpr const char* kLiftU = "u";
inline constexpr const char* kLiftV0 = "v0";
inline constexpr const char* kLiftV1 = "v1";

// Coefficientwise conjugation; on polynomials this realizes conj(g(conj v)).
// Involution fixing exactly the real-coefficient polynomials.
MultiPoly hat_conj(const MultiPoly& g);

// A pair of slice polynomials g, h in v together with their hat conjugates
// and the common homogenization degree m = max(deg g, deg h) >= 1.
struct SlicePair {
  MultiPoly g, h;
  MultiPoly g_hat, h_hat;
  std::uint32_t m;
};

// Validates the inputs (univariate in v, m >= 1; DegenerateLift otherwise).
SlicePair make_slice_pair(MultiPoly g, MultiPoly h);

// The lift of a slice pair: four bihomogeneous components of bidegree (1, m),
//   P0 = s*v0^m, P1 = u*v0^m, P2 = s*G - u*H_hat, P3 = s*H + u*G_hat,
// where capitals are the degree-m homogenizations in (v0, v1).
struct SurfaceParam {
  std::array<MultiPoly, 4> p;
  std::uint32_t m;
};

SurfaceParam twistor_lift(const SlicePair& pair);

// The line {param([s,u],[1,v]) : [s,u]} of the ruling, as the span of the
// [1,0] and [0,1] evaluations. A twistor line exactly when v is real.
Line3 ruling_line(const SurfaceParam& param, const GaussianRational& v);

}  // namespace twistor
