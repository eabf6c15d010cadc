#pragma once

#include <array>
#include <ostream>

#include "twistor/rational.hpp"

namespace twistor {

// Quaternion with exact rational components over the standard basis (1,i,j,k),
// ij = k. Noncommutative Hamilton product.
struct Quaternion {
  Rational r, i, j, k;

  Quaternion() : r(0), i(0), j(0), k(0) {}
  Quaternion(Rational r_, Rational i_, Rational j_, Rational k_)
      : r(std::move(r_)), i(std::move(i_)), j(std::move(j_)), k(std::move(k_)) {}
  Quaternion(long scalar) : r(scalar), i(0), j(0), k(0) {}

  // z0 + z1*j with complex z0 = a+bi, z1 = c+di maps to (a, b, c, d).
  static Quaternion from_complex_pair(const GaussianRational& z0, const GaussianRational& z1) {
    return Quaternion(z0.re, z0.im, z1.re, z1.im);
  }

  static Quaternion unit_i() { return Quaternion(Rational(0), Rational(1), Rational(0), Rational(0)); }
  static Quaternion unit_j() { return Quaternion(Rational(0), Rational(0), Rational(1), Rational(0)); }
  static Quaternion unit_k() { return Quaternion(Rational(0), Rational(0), Rational(0), Rational(1)); }

  bool is_zero() const { return r == 0 && i == 0 && j == 0 && k == 0; }

  Quaternion conj() const { return Quaternion(r, -i, -j, -k); }

  Rational norm_sq() const { return r * r + i * i + j * j + k * k; }

  Quaternion inverse() const {
    if (is_zero()) fail(ErrorKind::Internal, "inverse of zero quaternion");
    Rational n = norm_sq();
    return Quaternion(r / n, -i / n, -j / n, -k / n);
  }

  Quaternion operator-() const { return Quaternion(-r, -i, -j, -k); }

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return Quaternion(a.r + b.r, a.i + b.i, a.j + b.j, a.k + b.k);
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return Quaternion(a.r - b.r, a.i - b.i, a.j - b.j, a.k - b.k);
  }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return Quaternion(a.r * b.r - a.i * b.i - a.j * b.j - a.k * b.k,
                      a.r * b.i + a.i * b.r + a.j * b.k - a.k * b.j,
                      a.r * b.j - a.i * b.k + a.j * b.r + a.k * b.i,
                      a.r * b.k + a.i * b.j - a.j * b.i + a.k * b.r);
  }
  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.r == b.r && a.i == b.i && a.j == b.j && a.k == b.k;
  }
  friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }
};

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  os << "(" << q.r.get_str() << "," << q.i.get_str() << "," << q.j.get_str() << ","
     << q.k.get_str() << ")";
  return os;
}

// Point of the left quaternionic projective line: [q0, q1] with equivalence
// [q0, q1] ~ [m*q0, m*q1] for every nonzero quaternion m. Stored in canonical
// form: [1, q0^{-1} q1] when q0 != 0, else [0, 1].
struct HPoint {
  Quaternion q0, q1;

  HPoint(Quaternion a, Quaternion b) : q0(std::move(a)), q1(std::move(b)) {
    if (q0.is_zero() && q1.is_zero())
      fail(ErrorKind::ZeroPoint, "both quaternionic coordinates are zero");
  }

  HPoint normalized() const {
    if (!q0.is_zero()) {
      return HPoint(Quaternion(1), q0.inverse() * q1);
    }
    return HPoint(Quaternion(0), Quaternion(1));
  }

  bool is_canonical() const {
    if (q0 == Quaternion(1)) return true;
    return q0.is_zero() && q1 == Quaternion(1);
  }

  friend bool operator==(const HPoint& a, const HPoint& b) {
    HPoint na = a.normalized();
    HPoint nb = b.normalized();
    return na.q0 == nb.q0 && na.q1 == nb.q1;
  }
  friend bool operator!=(const HPoint& a, const HPoint& b) { return !(a == b); }
};

inline HPoint hp1_normalize(const HPoint& p) { return p.normalized(); }

inline std::ostream& operator<<(std::ostream& os, const HPoint& p) {
  return os << "[" << p.q0 << ", " << p.q1 << "]";
}

}  // namespace twistor
