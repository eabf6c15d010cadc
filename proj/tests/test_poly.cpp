#include <doctest.h>

#include "twistor/expr.hpp"
#include "twistor/multipoly.hpp"
#include "twistor/sampling.hpp"

using namespace twistor;

namespace {

MultiPoly var(const char* name) { return MultiPoly::variable(name); }

MultiPoly random_poly(Rng& rng, const std::vector<std::string>& vars, int max_deg, int terms) {
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    MultiPoly mono = MultiPoly::constant(rng.gaussian(6, 3));
    for (const auto& v : vars)
      mono = mono * MultiPoly::monomial(v, static_cast<std::uint32_t>(rng.int_in(0, max_deg)));
    p += mono;
  }
  return p;
}

}  // namespace

TEST_CASE("evaluation") {
  MultiPoly p = var("v") * var("v") + MultiPoly::constant(GaussianRational(1));
  CHECK(p.eval({{"v", GaussianRational::unit_i()}}) == GaussianRational(0));

  MultiPoly q = var("z1") * var("z2") - var("z0") * var("z3");
  CHECK(q.eval({{"z0", GaussianRational(1)},
                {"z1", GaussianRational(0)},
                {"z2", GaussianRational(2)},
                {"z3", GaussianRational(0)}}) == GaussianRational(0));

  CHECK(var("w").eval({{"w", GaussianRational(make_rational(3, 2))}}) ==
        GaussianRational(make_rational(3, 2)));

  CHECK_THROWS_AS(q.eval({{"z0", GaussianRational(1)}}), Error);
  try {
    q.eval({{"z0", GaussianRational(1)}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingVariable);
  }
}

TEST_CASE("degree is additive under products") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    MultiPoly p = random_poly(rng, {"x", "y"}, 3, 4);
    MultiPoly q = random_poly(rng, {"y", "z"}, 3, 4);
    if (p.is_zero() || q.is_zero()) continue;
    CHECK((p * q).total_degree() == p.total_degree() + q.total_degree());
  }
}

TEST_CASE("ring identities") {
  Rng rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    MultiPoly p = random_poly(rng, {"x", "y"}, 3, 4);
    MultiPoly q = random_poly(rng, {"x", "y"}, 3, 4);
    MultiPoly r = random_poly(rng, {"y"}, 2, 3);
    CHECK((p + q) - q == p);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK(p.conj_coefficients().conj_coefficients() == p);
  }
}

TEST_CASE("homogenization") {
  MultiPoly v = var("v");
  MultiPoly v0 = var("v0");
  MultiPoly one = MultiPoly::constant(GaussianRational(1));

  CHECK((v + one).homogenize("v", "v0", 1) == v + v0);
  CHECK((v * v + one).homogenize("v", "v0", 2) == v * v + v0 * v0);
  CHECK(v.homogenize("v", "v0", 3) == v * v0 * v0);

  CHECK_THROWS_AS((v * v).homogenize("v", "v0", 1), Error);
  try {
    (v * v).homogenize("v", "v0", 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeTooSmall);
  }

  // Homogenization output is homogeneous in {v, v0}.
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly p = random_poly(rng, {"v"}, 4, 3);
    if (p.is_zero()) continue;
    auto h = p.homogenize("v", "v0", 5);
    CHECK(h.is_homogeneous());
    CHECK(h.total_degree() == 5);
  }
}

TEST_CASE("specialize and substitute agree with evaluation") {
  Rng rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    MultiPoly p = random_poly(rng, {"x", "y"}, 3, 5);
    GaussianRational xv = rng.gaussian();
    GaussianRational yv = rng.gaussian();
    MultiPoly px = p.specialize({{"x", xv}});
    CHECK(px.degree_in("x") <= 0);
    if (!px.is_zero())
      CHECK(px.eval({{"y", yv}}) == p.eval({{"x", xv}, {"y", yv}}));
    // Substituting y -> x^2 + 1 then evaluating equals evaluating at the image.
    MultiPoly image = var("x") * var("x") + MultiPoly::constant(GaussianRational(1));
    MultiPoly comp = p.substitute({{"y", image}});
    GaussianRational image_val = image.eval({{"x", xv}});
    if (!comp.is_zero() || !p.is_zero())
      CHECK(comp.eval({{"x", xv}}) == p.eval({{"x", xv}, {"y", image_val}}));
  }
}

TEST_CASE("canonical form strips unused variables") {
  MultiPoly p = var("x") + var("y") - var("y");
  CHECK(p == var("x"));
  CHECK(p.variables() == std::vector<std::string>{"x"});
  CHECK(proportional(p * GaussianRational(3), p));
  CHECK_FALSE(proportional(p, var("y")));
}
