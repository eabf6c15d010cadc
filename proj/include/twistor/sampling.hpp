#pragma once

#include <cstdint>
#include <random>

#include "twistor/projective.hpp"
#include "twistor/quaternion.hpp"

namespace twistor {

// Deterministic source of small exact scalars for probes, sampling-based
// validation and the randomized test suites. Bounded draws use modulo on the
// raw engine output so sequences do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  long int_in(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(long max_num = 12, long max_den = 6) {
    return make_rational(int_in(-max_num, max_num), int_in(1, max_den));
  }

  Rational nonzero_rational(long max_num = 12, long max_den = 6) {
    while (true) {
      Rational q = rational(max_num, max_den);
      if (q != 0) return q;
    }
  }

  GaussianRational gaussian(long max_num = 12, long max_den = 6) {
    return GaussianRational(rational(max_num, max_den), rational(max_num, max_den));
  }

  GaussianRational nonzero_gaussian(long max_num = 12, long max_den = 6) {
    while (true) {
      GaussianRational z = gaussian(max_num, max_den);
      if (!z.is_zero()) return z;
    }
  }

  ProjPoint proj_point(std::size_t dim) {
    while (true) {
      std::vector<GaussianRational> c;
      c.reserve(dim);
      bool nonzero = false;
      for (std::size_t k = 0; k < dim; ++k) {
        c.push_back(gaussian());
        nonzero = nonzero || !c.back().is_zero();
      }
      if (nonzero) return ProjPoint(std::move(c));
    }
  }

  Line3 line() {
    while (true) {
      ProjPoint a = proj_point(4);
      ProjPoint b = proj_point(4);
      if (!ProjPoint::proportional_coords(a.coords, b.coords)) return Line3(a, b);
    }
  }

  Quaternion quaternion(long max_num = 8, long max_den = 4) {
    return Quaternion(rational(max_num, max_den), rational(max_num, max_den),
                      rational(max_num, max_den), rational(max_num, max_den));
  }

  HPoint hpoint() {
    while (true) {
      Quaternion q0 = quaternion();
      Quaternion q1 = quaternion();
      if (!q0.is_zero() || !q1.is_zero()) return HPoint(std::move(q0), std::move(q1));
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace twistor
