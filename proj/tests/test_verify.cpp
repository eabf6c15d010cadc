#include <doctest.h>

#include "twistor/verify.hpp"

using namespace twistor;

namespace {

GaussianRational c(long re, long im = 0) { return GaussianRational(re, im); }

MultiPoly var(const char* name) { return MultiPoly::variable(name); }

MultiPoly vpoly(std::vector<GaussianRational> coeffs) {
  MultiPoly p;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    p += MultiPoly::monomial(kSliceVar, static_cast<std::uint32_t>(k), coeffs[k]);
  return p;
}

MultiPoly wpoly(std::vector<GaussianRational> coeffs) {
  MultiPoly p;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    p += MultiPoly::monomial(kCurveVar, static_cast<std::uint32_t>(k), coeffs[k]);
  return p;
}

MultiPoly random_real_poly(Rng& rng, const char* v, int degree) {
  MultiPoly p;
  for (int k = 0; k < degree; ++k)
    p += MultiPoly::monomial(v, static_cast<std::uint32_t>(k), GaussianRational(rng.rational(6, 1)));
  p += MultiPoly::monomial(v, static_cast<std::uint32_t>(degree),
                           GaussianRational(rng.nonzero_rational(6, 1)));
  return p;
}

MultiPoly random_complex_poly(Rng& rng, const char* v, int degree) {
  MultiPoly p;
  for (int k = 0; k < degree; ++k)
    p += MultiPoly::monomial(v, static_cast<std::uint32_t>(k), rng.gaussian(5, 2));
  p += MultiPoly::monomial(v, static_cast<std::uint32_t>(degree), rng.nonzero_gaussian(5, 2));
  return p;
}

const MultiPoly kQuadric = var("z1") * var("z2") - var("z0") * var("z3");

}  // namespace

TEST_CASE("j-invariance of explicit surfaces") {
  JInvariance q = j_invariance(kQuadric);
  CHECK(q.holds);
  CHECK(q.lambda == c(1));

  JInvariance planes = j_invariance(var("z0") * var("z1"));
  CHECK(planes.holds);
  CHECK(planes.lambda == c(-1));

  CHECK_FALSE(j_invariance(var("z0") * var("z0")).holds);
}

TEST_CASE("line membership in a surface") {
  Line3 ruling(ProjPoint(c(1), c(0), c(2), c(0)), ProjPoint(c(0), c(1), c(0), c(2)));
  CHECK(line_on_surface(kQuadric, ruling));

  Line3 off(ProjPoint(c(1), c(0), c(0), c(0)), ProjPoint(c(0), c(0), c(0), c(1)));
  CHECK_FALSE(line_on_surface(kQuadric, off));

  Line3 e01(ProjPoint(c(1), c(0), c(0), c(0)), ProjPoint(c(0), c(1), c(0), c(0)));
  CHECK(line_on_surface(kQuadric, e01));
}

TEST_CASE("line membership agrees with pointwise sampling") {
  Rng rng(179);
  int seen_true = 0, seen_false = 0;
  while (seen_true < 10 || seen_false < 10) {
    Line3 line = (seen_true < 10)
                     ? Line3(ProjPoint(c(1), c(0), rng.gaussian(), c(0)),
                             ProjPoint(c(0), c(1), c(0), c(0)))
                     : rng.line();
    bool claim = line_on_surface(kQuadric, line);
    if (claim) {
      for (int k = 0; k < 50; ++k) {
        ProjPoint z = line.at(rng.gaussian(), rng.gaussian());
        CHECK(kQuadric.eval({{"z0", z[0]}, {"z1", z[1]}, {"z2", z[2]}, {"z3", z[3]}}) == c(0));
      }
      ++seen_true;
    } else {
      bool witness = false;
      for (int k = 0; k < 20 && !witness; ++k) {
        ProjPoint z = line.at(rng.gaussian(), rng.gaussian());
        witness =
            !(kQuadric.eval({{"z0", z[0]}, {"z1", z[1]}, {"z2", z[2]}, {"z3", z[3]}})).is_zero();
      }
      CHECK(witness);
      ++seen_false;
    }
  }
}

TEST_CASE("generic fiber counts") {
  CHECK(generic_fiber_count(make_slice_pair(vpoly({c(0), c(1)}), MultiPoly()), 3) == 1);
  CHECK(generic_fiber_count(make_slice_pair(vpoly({c(0), c(0), c(1)}), MultiPoly()), 3) == 2);
  CHECK(generic_fiber_count(make_slice_pair(vpoly({c(0), c(1)}), vpoly({c(0), c(1)})), 3) == 1);
}

TEST_CASE("surface report for the standard quadric") {
  SlicePair pair = make_slice_pair(vpoly({c(0), c(1)}), MultiPoly());
  ImplicitSurface surface = implicitize_slice(pair);
  Certificate cert = surface_report(surface, pair, 5, 42);
  CHECK(cert.degree == 2);
  CHECK(cert.parity_ok);
  CHECK(cert.j.holds);
  CHECK(cert.j.lambda == c(1));
  CHECK(cert.fibers.size() == 5);
  CHECK(cert.fibers_ok);
  REQUIRE(cert.fiber_count.has_value());
  CHECK(*cert.fiber_count == 1);
  CHECK(cert.seed == 42);
  CHECK(cert.all_pass());
}

TEST_CASE("surface report for the grassmann quadric") {
  Rng rng(181);
  ECurve curve = e_curve(wpoly({c(0), c(1)}), wpoly({c(1)}));
  LineFamily family = line_family(curve, rng);
  ImplicitSurface surface = implicitize_ruled(family);
  Certificate cert = surface_report(surface, family, 5, 7);
  CHECK(cert.degree == 2);
  CHECK(cert.parity_ok);
  CHECK(cert.j.holds);
  CHECK(cert.fibers_ok);
  CHECK_FALSE(cert.fiber_count.has_value());
  CHECK(cert.all_pass());
}

TEST_CASE("surface report flags the doubly swept quadric") {
  SlicePair pair = make_slice_pair(vpoly({c(0), c(0), c(1)}), MultiPoly());
  ImplicitSurface surface = implicitize_slice(pair);
  Certificate cert = surface_report(surface, pair, 5, 3);
  CHECK(cert.degree == 2);
  CHECK(cert.parity_ok);
  REQUIRE(cert.fiber_count.has_value());
  CHECK(*cert.fiber_count == 2);
  CHECK(cert.all_pass());
}

TEST_CASE("randomized construction suite certifies") {
  Rng rng(191);
  int instances = 0;
  // Slice route, mixed real and complex coefficients.
  for (int k = 0; k < 15; ++k) {
    int m = 1 + k % 3;
    MultiPoly g = (k % 2 == 0) ? random_real_poly(rng, kSliceVar, m)
                               : random_complex_poly(rng, kSliceVar, m);
    MultiPoly h = (k % 3 == 0) ? MultiPoly() : random_real_poly(rng, kSliceVar, rng.int_in(0, m));
    SlicePair pair = make_slice_pair(std::move(g), std::move(h));
    ImplicitSurface surface = implicitize_slice(pair, static_cast<std::uint64_t>(k));
    Certificate cert = surface_report(surface, pair, 4, static_cast<std::uint64_t>(k));
    CHECK(cert.parity_ok);
    CHECK(cert.j.holds);
    CHECK((cert.j.lambda * cert.j.lambda.conj()) == c(1));
    CHECK(cert.fibers_ok);
    ++instances;
  }
  // Grassmann route.
  for (int k = 0; k < 10; ++k) {
    ECurve curve = e_curve(random_real_poly(rng, kCurveVar, 1 + k % 2),
                           random_real_poly(rng, kCurveVar, 1 + (k / 2) % 2));
    LineFamily family = line_family(curve, rng);
    ImplicitSurface surface = implicitize_ruled(family, static_cast<std::uint64_t>(k));
    Certificate cert = surface_report(surface, family, 4, static_cast<std::uint64_t>(k));
    CHECK(cert.parity_ok);
    CHECK(cert.j.holds);
    CHECK((cert.j.lambda * cert.j.lambda.conj()) == c(1));
    CHECK(cert.fibers_ok);
    ++instances;
  }
  CHECK(instances == 25);
}
