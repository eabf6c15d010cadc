#include <doctest.h>

#include "twistor/quaternion.hpp"
#include "twistor/sampling.hpp"

using namespace twistor;

namespace {

Quaternion one_q(long x) { return Quaternion(x); }

}  // namespace

TEST_CASE("hamilton product on basis elements") {
  Quaternion i = Quaternion::unit_i();
  Quaternion j = Quaternion::unit_j();
  Quaternion k = Quaternion::unit_k();
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(i * i == -one_q(1));
  CHECK(j * j == -one_q(1));
  CHECK(k * k == -one_q(1));
  CHECK(i * j == -(j * i));
  CHECK(j * k == -(k * j));
  CHECK(k * i == -(i * k));
}

TEST_CASE("identity and complex-slice products") {
  // 1 * q = q for q = 2 + 3j.
  Quaternion q(Rational(2), Rational(0), Rational(3), Rational(0));
  CHECK(one_q(1) * q == q);

  // j * (a + b*j) = -conj(b) + conj(a)*j; with a = i, b = 1+i this is
  // (-1+i) + (-i)*j.
  Quaternion a = Quaternion::from_complex_pair(GaussianRational::unit_i(), GaussianRational(0));
  Quaternion b =
      Quaternion::from_complex_pair(GaussianRational(1, 1), GaussianRational(0));
  Quaternion lhs = Quaternion::unit_j() * (a + b * Quaternion::unit_j());
  Quaternion expected = Quaternion::from_complex_pair(GaussianRational(-1, 1),
                                                      GaussianRational(Rational(0), Rational(-1)));
  CHECK(lhs == expected);
}

TEST_CASE("conjugation gives the squared norm") {
  Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    Quaternion q = rng.quaternion();
    Quaternion n = q.conj() * q;
    CHECK(n.i == 0);
    CHECK(n.j == 0);
    CHECK(n.k == 0);
    CHECK(n.r == q.norm_sq());
    CHECK(n.r >= 0);
    CHECK((n.r == 0) == q.is_zero());
  }
}

TEST_CASE("hp1 normalization") {
  Quaternion j = Quaternion::unit_j();
  Quaternion k = Quaternion::unit_k();

  HPoint p(j, one_q(1));
  HPoint n = hp1_normalize(p);
  CHECK(n.q0 == one_q(1));
  CHECK(n.q1 == -j);

  HPoint already(one_q(1), one_q(0));
  CHECK(hp1_normalize(already).q0 == one_q(1));
  CHECK(hp1_normalize(already).q1 == one_q(0));

  HPoint zero_first(one_q(0), one_q(2) + k);
  HPoint nz = hp1_normalize(zero_first);
  CHECK(nz.q0 == one_q(0));
  CHECK(nz.q1 == one_q(1));

  CHECK_THROWS_AS(HPoint(one_q(0), one_q(0)), Error);
  try {
    HPoint(one_q(0), one_q(0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroPoint);
  }
}

TEST_CASE("normalization is idempotent and left-invariant") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    HPoint p = rng.hpoint();
    HPoint n = hp1_normalize(p);
    CHECK(n.is_canonical());
    HPoint nn = hp1_normalize(n);
    CHECK(nn.q0 == n.q0);
    CHECK(nn.q1 == n.q1);

    Quaternion mu = rng.quaternion();
    while (mu.is_zero()) mu = rng.quaternion();
    HPoint scaled(mu * p.q0, mu * p.q1);
    CHECK(scaled == p);
  }
}

TEST_CASE("rational arithmetic is exact and round-trips") {
  Rng rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    GaussianRational a = rng.gaussian(1000, 60);
    GaussianRational b = rng.gaussian(1000, 60);
    CHECK((a + b) - b == a);
    CHECK(parse_rational(render_rational(a.re)) == a.re);
    CHECK(parse_rational(render_rational(a.im)) == a.im);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
  CHECK(parse_rational("3/6") == make_rational(1, 2));
  CHECK(parse_rational("-4/8") == make_rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1/2/3"), Error);
}

TEST_CASE("gaussian rational field operations") {
  GaussianRational i = GaussianRational::unit_i();
  CHECK(i * i == GaussianRational(-1));
  GaussianRational z(make_rational(3, 2), make_rational(-1, 4));
  CHECK(z * z.inverse() == GaussianRational(1));
  CHECK(z.conj().conj() == z);
  CHECK((z * z.conj()).im == 0);
  CHECK((z * z.conj()).re == z.norm());
}
