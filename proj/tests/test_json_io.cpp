#include <doctest.h>

#include "twistor/json_io.hpp"
#include "twistor/sampling.hpp"

using namespace twistor;

namespace {

GaussianRational c(long re, long im = 0) { return GaussianRational(re, im); }

MultiPoly random_poly(Rng& rng, const std::vector<std::string>& vars) {
  MultiPoly p;
  for (int t = 0; t < 5; ++t) {
    MultiPoly mono = MultiPoly::constant(rng.gaussian(9, 4));
    for (const auto& v : vars)
      mono = mono * MultiPoly::monomial(v, static_cast<std::uint32_t>(rng.int_in(0, 3)));
    p += mono;
  }
  return p;
}

}  // namespace

TEST_CASE("complex scalars round-trip through JSON") {
  GaussianRational z(make_rational(-7, 3), make_rational(5, 2));
  Json j = to_json(z);
  CHECK(j.at("re") == "-7/3");
  CHECK(j.at("im") == "5/2");
  CHECK(gaussian_from_json(j) == z);
}

TEST_CASE("polynomials round-trip through JSON") {
  Rng rng(197);
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly p = random_poly(rng, {"z0", "z1", "z2"});
    CHECK(poly_from_json(to_json(p)) == p);
  }
  // Serialization is graded-lex sorted, so equal polynomials dump identically.
  MultiPoly a = MultiPoly::variable("x") + MultiPoly::variable("y");
  MultiPoly b = MultiPoly::variable("y") + MultiPoly::variable("x");
  CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("lines and pluecker points round-trip") {
  Rng rng(199);
  for (int trial = 0; trial < 10; ++trial) {
    Line3 line = rng.line();
    Line3 back = line_from_json(to_json(line));
    CHECK(back == line);
    PlueckerPoint t = pluecker_embed(line);
    CHECK(pluecker_from_json(to_json(t)) == t);
  }
}

TEST_CASE("certificates serialize with a stable field order") {
  SlicePair pair = make_slice_pair(MultiPoly::variable(kSliceVar), MultiPoly());
  ImplicitSurface surface = implicitize_slice(pair);
  Certificate cert = surface_report(surface, pair, 3, 0);
  Json j = to_json(cert);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"degree", "parity_ok", "j_invariance", "twistor_fibers",
                                         "fiber_count", "seed", "construction", "inputs"});
  CHECK(j.at("degree") == 2);
  CHECK(j.at("fiber_count") == 1);
  CHECK(j.at("twistor_fibers").size() == 3);
  for (const auto& fiber : j.at("twistor_fibers")) {
    CHECK(fiber.at("certificate").at("is_twistor") == true);
    CHECK(fiber.at("on_surface") == true);
  }

  // Surfaces carry equation, degree, cleanup and provenance.
  Json sj = to_json(surface);
  CHECK(sj.contains("F"));
  CHECK(sj.at("degree") == 2);
  CHECK(sj.at("provenance").at("construction") == "slice");
  ImplicitSurface back = surface_from_json(sj);
  CHECK(back.f == surface.f);
  CHECK(back.degree == surface.degree);
}

TEST_CASE("fiber count reports unprobed constructions") {
  Rng rng(211);
  ECurve curve = e_curve(MultiPoly::variable(kCurveVar),
                         MultiPoly::constant(c(1)));
  LineFamily family = line_family(curve, rng);
  ImplicitSurface surface = implicitize_ruled(family);
  Certificate cert = surface_report(surface, family, 2, 0);
  Json j = to_json(cert);
  CHECK(j.at("fiber_count") == "not probed");
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(gaussian_from_json(Json::object()), Error);
  CHECK_THROWS_AS(poly_from_json(Json{{"variables", {"x"}}}), Error);
  CHECK_THROWS_AS(line_from_json(Json{{"A", Json::array()}}), Error);
}
