#include "twistor/verify.hpp"

#include <algorithm>
#include <map>

#include "twistor/errors.hpp"
#include "twistor/polyops.hpp"

namespace twistor {

JInvariance j_invariance(const MultiPoly& f) {
  if (f.is_zero()) fail(ErrorKind::Internal, "j-invariance of the zero polynomial");
  std::map<std::string, MultiPoly> sub{
      {"z0", -MultiPoly::variable("z1")},
      {"z1", MultiPoly::variable("z0")},
      {"z2", -MultiPoly::variable("z3")},
      {"z3", MultiPoly::variable("z2")},
  };
  MultiPoly g = f.conj_coefficients().substitute(sub);
  if (!proportional(g, f)) return JInvariance{false, GaussianRational(0)};
  return JInvariance{true, g.leading_coefficient() / f.leading_coefficient()};
}

bool line_on_surface(const MultiPoly& f, const Line3& line) {
  MultiPoly s = MultiPoly::variable("s");
  MultiPoly u = MultiPoly::variable("u");
  std::map<std::string, MultiPoly> sub;
  for (std::size_t k = 0; k < 4; ++k)
    sub[kSurfaceVars[k]] = s * MultiPoly::constant(line.a[k]) + u * MultiPoly::constant(line.b[k]);
  return f.substitute(sub).is_zero();
}

int generic_fiber_count(const SlicePair& pair, std::uint64_t seed) {
  Rng rng(seed);
  std::map<int, int> histogram;
  int collected = 0;
  for (int attempt = 0; attempt < 100 && collected < 10; ++attempt) {
    GaussianRational s0 = rng.gaussian();
    GaussianRational u0 = rng.gaussian();
    if (s0.is_zero() && u0.is_zero()) continue;
    GaussianRational v0(rng.nonzero_rational());
    std::map<std::string, GaussianRational> at{{kSliceVar, v0}};
    GaussianRational z2 = s0 * pair.g.eval(at) - u0 * pair.h_hat.eval(at);
    GaussianRational z3 = s0 * pair.h.eval(at) + u0 * pair.g_hat.eval(at);
    MultiPoly a1 = MultiPoly::constant(s0) * pair.g - MultiPoly::constant(u0) * pair.h_hat -
                   MultiPoly::constant(z2);
    MultiPoly a2 = MultiPoly::constant(s0) * pair.h + MultiPoly::constant(u0) * pair.g_hat -
                   MultiPoly::constant(z3);
    if (a1.is_zero() && a2.is_zero()) continue;  // degenerate sample
    MultiPoly g = poly_gcd(a1, a2);
    ++histogram[distinct_root_count(g, kSliceVar)];
    ++collected;
  }
  if (collected == 0) fail(ErrorKind::Internal, "could not sample fiber counts");
  int best_count = 0;
  int best_freq = 0;
  for (const auto& [count, freq] : histogram) {
    if (freq > best_freq) {
      best_freq = freq;
      best_count = count;
    }
  }
  return best_count;
}

namespace {

FiberSample fiber_sample(const MultiPoly& f, const Line3& line, GaussianRational parameter) {
  TwistorCertificate cert = is_twistor_line(pluecker_embed(line));
  bool on = line_on_surface(f, line);
  return FiberSample{std::move(parameter), std::move(cert), on};
}

Certificate base_certificate(const ImplicitSurface& surface, std::uint64_t seed) {
  Certificate c;
  c.degree = surface.degree;
  c.parity_ok = (surface.degree % 2 == 0);
  c.j = j_invariance(surface.f);
  c.seed = seed;
  c.construction = surface.construction;
  c.inputs = surface.inputs;
  return c;
}

}  // namespace

Certificate surface_report(const ImplicitSurface& surface, const SlicePair& pair, int samples,
                           std::uint64_t seed) {
  Certificate c = base_certificate(surface, seed);
  Rng rng(seed);
  SurfaceParam param = twistor_lift(pair);
  for (int k = 0; k < samples; ++k) {
    GaussianRational v(rng.rational());
    c.fibers.push_back(fiber_sample(surface.f, ruling_line(param, v), v));
  }
  c.fibers_ok = std::all_of(c.fibers.begin(), c.fibers.end(), [](const FiberSample& s) {
    return s.cert.is_twistor && s.on_surface;
  });
  c.fiber_count = generic_fiber_count(pair, seed ^ 0x66696265ULL);
  return c;
}

Certificate surface_report(const ImplicitSurface& surface, const LineFamily& family, int samples,
                           std::uint64_t seed) {
  Certificate c = base_certificate(surface, seed);
  Rng rng(seed);
  std::map<std::string, GaussianRational> point;
  for (int k = 0; k < samples; ++k) {
    GaussianRational w;
    bool found = false;
    for (int attempt = 0; attempt < 32 && !found; ++attempt) {
      w = GaussianRational(rng.rational());
      point[kCurveVar] = w;
      found = !family.pair_pluecker.eval(point).is_zero();
    }
    if (!found) fail(ErrorKind::Internal, "could not sample a regular ruling parameter");
    c.fibers.push_back(fiber_sample(surface.f, family_line_at(family, w), w));
  }
  c.fibers_ok = std::all_of(c.fibers.begin(), c.fibers.end(), [](const FiberSample& s) {
    return s.cert.is_twistor && s.on_surface;
  });
  return c;
}

}  // namespace twistor
