#include <doctest.h>

#include "twistor/polyops.hpp"
#include "twistor/sampling.hpp"

using namespace twistor;

namespace {

MultiPoly var(const char* name) { return MultiPoly::variable(name); }
MultiPoly constant(long c) { return MultiPoly::constant(GaussianRational(c)); }

MultiPoly random_poly(Rng& rng, const std::vector<std::string>& vars, int max_deg, int terms) {
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    MultiPoly mono = MultiPoly::constant(rng.gaussian(5, 2));
    for (const auto& v : vars)
      mono = mono * MultiPoly::monomial(v, static_cast<std::uint32_t>(rng.int_in(0, max_deg)));
    p += mono;
  }
  return p;
}

// Cofactor-expansion oracle for the fraction-free determinant.
MultiPoly naive_determinant(const std::vector<std::vector<MultiPoly>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  MultiPoly det;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<MultiPoly>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      sub.push_back(std::move(row));
    }
    MultiPoly cof = m[0][c] * naive_determinant(sub);
    if (c % 2 == 0)
      det += cof;
    else
      det -= cof;
  }
  return det;
}

}  // namespace

TEST_CASE("sylvester resultant basics") {
  MultiPoly v = var("v");

  // Res_v(v - a, v - b) = a - b with the p-rows-first convention.
  CHECK(sylvester_resultant(v - var("a"), v - var("b"), "v") == var("a") - var("b"));

  // Common root v = i.
  MultiPoly p = v * v + constant(1);
  MultiPoly q = v - MultiPoly::constant(GaussianRational::unit_i());
  CHECK(sylvester_resultant(p, q, "v").is_zero());

  // 2x2 elimination of the standard quadric.
  MultiPoly r = sylvester_resultant(var("z0") * v - var("z2"), var("z1") * v - var("z3"), "v");
  MultiPoly quadric = var("z1") * var("z2") - var("z0") * var("z3");
  CHECK(r == quadric);

  CHECK_THROWS_AS(sylvester_resultant(constant(5), v, "v"), Error);
  try {
    sylvester_resultant(v, constant(5), "v");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroDegree);
  }
}

TEST_CASE("resultant commutes with degree-preserving specialization") {
  Rng rng(31);
  int done = 0;
  while (done < 50) {
    MultiPoly p = random_poly(rng, {"v", "x"}, 2, 4) + MultiPoly::monomial("v", 2);
    MultiPoly q = random_poly(rng, {"v", "x"}, 2, 4) + MultiPoly::monomial("v", 2, rng.gaussian());
    if (p.degree_in("v") < 1 || q.degree_in("v") < 1) continue;
    GaussianRational xv(rng.rational());
    MultiPoly ps = p.specialize({{"x", xv}});
    MultiPoly qs = q.specialize({{"x", xv}});
    if (ps.degree_in("v") != p.degree_in("v") || qs.degree_in("v") != q.degree_in("v")) continue;
    MultiPoly res = sylvester_resultant(p, q, "v");
    MultiPoly res_then_spec = res.specialize({{"x", xv}});
    MultiPoly spec_then_res = sylvester_resultant(ps, qs, "v");
    CHECK(res_then_spec == spec_then_res);
    ++done;
  }
}

TEST_CASE("resultant vanishes exactly when a common factor exists") {
  Rng rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly c = var("v") - random_poly(rng, {"x"}, 1, 2);  // planted common factor
    MultiPoly a = var("v") * var("v") + random_poly(rng, {"x"}, 1, 2);
    MultiPoly b = var("v") + MultiPoly::constant(rng.gaussian());
    if (c.degree_in("v") < 1) continue;
    CHECK(sylvester_resultant(c * a, c * b, "v").is_zero());
    // a*c and a*c + 1 share no factor at all.
    MultiPoly p = c * a;
    MultiPoly q = c * a + constant(1);
    if (p.degree_in("v") >= 1 && q.degree_in("v") >= 1)
      CHECK_FALSE(sylvester_resultant(p, q, "v").is_zero());
  }
}

TEST_CASE("exact division") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    MultiPoly p = random_poly(rng, {"x", "y"}, 3, 4);
    MultiPoly d = random_poly(rng, {"x", "y"}, 2, 3);
    if (d.is_zero()) continue;
    auto q = divide_exact(p * d, d);
    REQUIRE(q.has_value());
    CHECK(*q == p);
    if (!d.is_constant()) CHECK_FALSE(divide_exact(p * d + constant(1), d).has_value());
  }
}

TEST_CASE("gcd recovers planted factors") {
  Rng rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    MultiPoly g = var("x") * var("y") + MultiPoly::constant(rng.nonzero_gaussian());
    MultiPoly a = random_poly(rng, {"x", "y"}, 2, 3);
    if (a.is_zero()) a = constant(1);
    MultiPoly b = a * g + constant(1);  // coprime to g by construction
    MultiPoly got = poly_gcd(g * a, g * b);
    CHECK(proportional(got, g));
  }
  CHECK(poly_gcd(MultiPoly(), var("x")) == var("x"));
  CHECK(poly_gcd(constant(4), var("x")) == constant(1));
}

TEST_CASE("squarefree part") {
  MultiPoly v = var("v");
  MultiPoly p = (v - constant(1)) * (v - constant(1)) * (v + constant(2));
  CHECK(proportional(squarefree_part(p, "v"), (v - constant(1)) * (v + constant(2))));

  CHECK(proportional(squarefree_part(v * v * v, "v"), v));

  MultiPoly quadric = var("z1") * var("z2") - var("z0") * var("z3");
  CHECK(proportional(squarefree_part(quadric * quadric, "z0"), quadric));

  // Output is coprime to its derivative in the chosen variable.
  Rng rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    MultiPoly f1 = var("v") - MultiPoly::constant(rng.gaussian());
    MultiPoly f2 = var("v") * var("v") + MultiPoly::constant(rng.nonzero_gaussian());
    MultiPoly p2 = f1 * f1 * f2;
    MultiPoly sf = squarefree_part(p2, "v");
    CHECK(poly_gcd(sf, sf.derivative("v")).is_constant());
    CHECK(divide_exact(p2, sf * sf.leading_coefficient().inverse() *
                               p2.leading_coefficient())
              .has_value());
  }
}

TEST_CASE("radical removes all multiplicities") {
  MultiPoly x = var("x");
  MultiPoly y = var("y");
  MultiPoly p = pow(x + y, 3) * pow(x - y, 2);
  CHECK(proportional(radical(p), (x + y) * (x - y)));
  CHECK(radical(constant(7)) == constant(1));
}

TEST_CASE("fraction-free determinant matches cofactor expansion") {
  Rng rng(53);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n));
      for (auto& row : m)
        for (auto& e : row) e = random_poly(rng, {"x", "y"}, 1, 2);
      CHECK(bareiss_determinant(m) == naive_determinant(m));
    }
  }
  // Pivoting path: zero upper-left block forces row swaps.
  std::vector<std::vector<MultiPoly>> m{{MultiPoly(), var("x")}, {var("y"), constant(1)}};
  CHECK(bareiss_determinant(m) == naive_determinant(m));
}

TEST_CASE("distinct root count via squarefree degree") {
  MultiPoly v = var("v");
  CHECK(distinct_root_count((v - constant(1)) * (v - constant(1)), "v") == 1);
  CHECK(distinct_root_count((v * v + constant(1)) * (v - constant(3)), "v") == 3);
  CHECK(distinct_root_count(constant(2), "v") == 0);
}
