#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "twistor/errors.hpp"

namespace twistor {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator) as long as every entry point canonicalizes.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) fail(ErrorKind::Internal, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "-p" or "p/q" with arbitrary-precision integers.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) fail(ErrorKind::SyntaxError, "empty rational literal");
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (text[i] == '+' || text[i] == '-') ++i;
  std::size_t after_num = digits(i);
  if (after_num == i) fail(ErrorKind::SyntaxError, "bad rational literal '" + text + "'");
  if (after_num < text.size()) {
    if (text[after_num] != '/')
      fail(ErrorKind::SyntaxError, "bad rational literal '" + text + "'");
    std::size_t den_start = after_num + 1;
    std::size_t after_den = digits(den_start);
    if (after_den == den_start || after_den != text.size())
      fail(ErrorKind::SyntaxError, "bad rational literal '" + text + "'");
  }
  Rational q(text);
  if (q.get_den() == 0) fail(ErrorKind::SyntaxError, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string render_rational(const Rational& q) { return q.get_str(); }

// Exact complex scalar a + b*i with rational a, b: the coefficient field for
// all symbolic computation in this project.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r), im(0) {}
  GaussianRational(long r, long i) : re(r), im(i) {}

  static GaussianRational unit_i() { return GaussianRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return GaussianRational(re, -im); }

  // re^2 + im^2, rational and >= 0.
  Rational norm() const { return re * re + im * im; }

  GaussianRational operator-() const { return GaussianRational(-re, -im); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) fail(ErrorKind::Internal, "division by zero GaussianRational");
    Rational n = o.norm();
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  GaussianRational inverse() const {
    if (is_zero()) fail(ErrorKind::Internal, "inverse of zero GaussianRational");
    Rational n = norm();
    return GaussianRational(re / n, -im / n);
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

// Renders as "a", "b*i" or "a+b*i" (compact diagnostic form; JSON carries the
// two parts separately).
inline std::string render_gaussian(const GaussianRational& z) {
  if (z.im == 0) return render_rational(z.re);
  std::string im_part = render_rational(z.im) + "*i";
  if (z.re == 0) return im_part;
  if (z.im > 0) return render_rational(z.re) + "+" + im_part;
  return render_rational(z.re) + im_part;  // im negative carries its own sign
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << render_gaussian(z);
}

}  // namespace twistor
