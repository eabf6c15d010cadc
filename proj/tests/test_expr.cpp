#include <doctest.h>

#include "twistor/expr.hpp"
#include "twistor/sampling.hpp"

using namespace twistor;

namespace {

GaussianRational c(long re, long im = 0) { return GaussianRational(re, im); }

MultiPoly vmono(std::uint32_t k, GaussianRational coeff) {
  return MultiPoly::monomial("v", k, std::move(coeff));
}

MultiPoly random_vpoly(Rng& rng) {
  MultiPoly p;
  int deg = static_cast<int>(rng.int_in(0, 5));
  for (int k = 0; k <= deg; ++k)
    p += vmono(static_cast<std::uint32_t>(k), rng.gaussian(20, 7));
  return p;
}

}  // namespace

TEST_CASE("grammar basics") {
  MultiPoly p = parse_poly("v^2 + (1/2)*i*v - 3", "v");
  MultiPoly expected = vmono(2, c(1)) + vmono(1, GaussianRational(Rational(0), make_rational(1, 2))) +
                       MultiPoly::constant(c(-3));
  CHECK(p == expected);

  CHECK(parse_poly("w", "w") == MultiPoly::variable("w"));

  CHECK_THROWS_AS(parse_poly("v**2", "v"), Error);
  try {
    parse_poly("v**2", "v");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
  }
}

TEST_CASE("precedence and grouping") {
  CHECK(parse_poly("1+2*v^2", "v") ==
        MultiPoly::constant(c(1)) + vmono(2, c(2)));
  CHECK(parse_poly("(1+2*v)^2", "v") ==
        MultiPoly::constant(c(1)) + vmono(1, c(4)) + vmono(2, c(4)));
  CHECK(parse_poly("-v^2", "v") == -vmono(2, c(1)));
  CHECK(parse_poly("2 - -3", "v") == MultiPoly::constant(c(5)));
  CHECK(parse_poly("1/2 + 1/2", "v") == MultiPoly::constant(c(1)));
  CHECK(parse_poly("i*i", "v") == MultiPoly::constant(c(-1)));
  CHECK(parse_poly("v^0", "v") == MultiPoly::constant(c(1)));
}

TEST_CASE("errors carry kinds and positions") {
  try {
    parse_poly("v + x", "v");
    FAIL("expected WrongVariable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongVariable);
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
  try {
    parse_poly("v ^ v", "v");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
  }
  CHECK_THROWS_AS(parse_poly("(v + 1", "v"), Error);
  CHECK_THROWS_AS(parse_poly("v +", "v"), Error);
  CHECK_THROWS_AS(parse_poly("", "v"), Error);
  CHECK_THROWS_AS(parse_poly("v/2", "v"), Error);
}

TEST_CASE("constants-only parsing") {
  CHECK(parse_complex_constant("3/4 - 2*i") ==
        GaussianRational(make_rational(3, 4), make_rational(-2)));
  CHECK_THROWS_AS(parse_complex_constant("v"), Error);
}

TEST_CASE("render and parse round-trip") {
  Rng rng(193);
  for (int trial = 0; trial < 200; ++trial) {
    MultiPoly p = random_vpoly(rng);
    std::string text = render_poly(p);
    CHECK(parse_poly(text, "v") == p);
  }
  CHECK(render_poly(MultiPoly()) == "0");
  CHECK(parse_poly(render_poly(MultiPoly()), "v").is_zero());
}
