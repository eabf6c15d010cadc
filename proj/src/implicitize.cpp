#include "twistor/implicitize.hpp"

#include <algorithm>

#include "twistor/errors.hpp"
#include "twistor/polyops.hpp"

namespace twistor {

namespace {

MultiPoly zvar(std::size_t k) { return MultiPoly::variable(kSurfaceVars[k]); }

// Chart equations whose common v-roots mark points of the swept surface.
std::pair<MultiPoly, MultiPoly> chart_equations(const SlicePair& pair) {
  MultiPoly p1 = zvar(0) * pair.g - zvar(1) * pair.h_hat - zvar(2);
  MultiPoly p2 = zvar(0) * pair.h + zvar(1) * pair.g_hat - zvar(3);
  return {std::move(p1), std::move(p2)};
}

// Strips visible coordinate-hyperplane factors, then multiplicities.
MultiPoly cleanup_surface(const MultiPoly& raw, std::vector<std::string>& log) {
  MultiPoly f = raw.monic();
  for (const auto& var : kSurfaceVars) {
    if (!f.uses_variable(var)) continue;
    std::size_t idx = static_cast<std::size_t>(
        std::lower_bound(f.variables().begin(), f.variables().end(), var) -
        f.variables().begin());
    std::uint32_t mn = UINT32_MAX;
    for (const auto& [exp, coeff] : f.terms()) mn = std::min(mn, exp[idx]);
    if (mn == 0) continue;
    auto q = divide_exact(f, MultiPoly::monomial(var, mn));
    if (!q || q->is_constant()) continue;  // keep a pure hyperplane equation
    f = std::move(*q);
    log.push_back("removed extraneous factor " + var + "^" + std::to_string(mn));
  }
  int degree_before = f.total_degree();
  MultiPoly sf = radical(f);
  int degree_after = sf.total_degree();
  if (degree_after < degree_before) {
    std::string entry = "squarefree reduction: degree " + std::to_string(degree_before) +
                        " -> " + std::to_string(degree_after);
    if (degree_after > 0 && degree_before % degree_after == 0) {
      std::uint32_t k = static_cast<std::uint32_t>(degree_before / degree_after);
      if (proportional(pow(sf, k), f)) entry += " (multiplicity " + std::to_string(k) + ")";
    }
    log.push_back(entry);
  }
  return sf.monic();
}

void validate_homogeneous(const MultiPoly& f) {
  // Sylvester entries are linear forms in z, so the determinant is forced to
  // be homogeneous; anything else is an internal fault, not an input fault.
  if (!f.is_homogeneous())
    fail(ErrorKind::Internal, "implicit equation is not homogeneous");
  for (const auto& var : f.variables())
    if (std::find(kSurfaceVars.begin(), kSurfaceVars.end(), var) == kSurfaceVars.end())
      fail(ErrorKind::Internal, "implicit equation contains foreign variable '" + var + "'");
}

ProjPoint sample_slice_point(const SurfaceParam& param, Rng& rng, int salt) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    GaussianRational s = rng.gaussian();
    GaussianRational u = rng.gaussian();
    if (s.is_zero() && u.is_zero()) continue;
    GaussianRational v0(1), v1;
    if (salt % 10 == 9) {
      v0 = GaussianRational(0);
      v1 = GaussianRational(1);
    } else {
      v1 = rng.gaussian();
    }
    std::map<std::string, GaussianRational> at{
        {kLiftS, s}, {kLiftU, u}, {kLiftV0, v0}, {kLiftV1, v1}};
    std::vector<GaussianRational> z(4);
    bool nonzero = false;
    for (std::size_t k = 0; k < 4; ++k) {
      z[k] = param.p[k].eval(at);
      nonzero = nonzero || !z[k].is_zero();
    }
    if (nonzero) return ProjPoint(std::move(z));
  }
  fail(ErrorKind::Internal, "could not sample a point of the lift");
}

ProjPoint sample_family_point(const LineFamily& family, Rng& rng) {
  std::map<std::string, GaussianRational> point;
  for (int attempt = 0; attempt < 64; ++attempt) {
    GaussianRational w(rng.rational());
    point[kCurveVar] = w;
    if (family.pair_pluecker.eval(point).is_zero()) continue;  // excluded parameter
    GaussianRational s = rng.gaussian();
    GaussianRational u = rng.gaussian();
    if (s.is_zero() && u.is_zero()) continue;
    std::vector<GaussianRational> z(4);
    bool nonzero = false;
    for (std::size_t k = 0; k < 4; ++k) {
      GaussianRational a = family.a[k].is_zero() ? GaussianRational(0) : family.a[k].eval(point);
      GaussianRational b = family.b[k].is_zero() ? GaussianRational(0) : family.b[k].eval(point);
      z[k] = s * a + u * b;
      nonzero = nonzero || !z[k].is_zero();
    }
    if (nonzero) return ProjPoint(std::move(z));
  }
  fail(ErrorKind::Internal, "could not sample a point of the ruling");
}

GaussianRational eval_surface(const MultiPoly& f, const ProjPoint& z) {
  std::map<std::string, GaussianRational> at;
  for (std::size_t k = 0; k < 4; ++k) at[kSurfaceVars[k]] = z[k];
  return f.eval(at);
}

void validate_membership(const ImplicitSurface& surface, const SlicePair& pair, int samples) {
  Rng rng(surface.seed ^ 0x6d656d62ULL);
  if (!membership_check(surface, pair, samples, rng))
    fail(ErrorKind::Internal, "implicit equation fails membership validation");
}

void validate_membership(const ImplicitSurface& surface, const LineFamily& family, int samples) {
  Rng rng(surface.seed ^ 0x6d656d62ULL);
  if (!membership_check(surface, family, samples, rng))
    fail(ErrorKind::Internal, "implicit equation fails membership validation");
}

}  // namespace

std::array<MultiPoly, 4> ruling_minors(const LineFamily& family) {
  std::array<MultiPoly, 4> minors;
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::vector<std::vector<MultiPoly>> m;
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == skip) continue;
      m.push_back({zvar(r), family.a[r], family.b[r]});
    }
    minors[skip] = bareiss_determinant(std::move(m));
  }
  return minors;
}

ImplicitSurface implicitize_slice(const SlicePair& pair, std::uint64_t seed,
                                  int validation_samples) {
  auto [p1, p2] = chart_equations(pair);
  if (p1.degree_in(kSliceVar) < 1 || p2.degree_in(kSliceVar) < 1)
    fail(ErrorKind::DegenerateParametrization, "chart equations are constant in v");
  MultiPoly raw = sylvester_resultant(p1, p2, kSliceVar);
  if (raw.is_zero())
    fail(ErrorKind::DegenerateParametrization, "resultant vanishes identically");
  validate_homogeneous(raw);

  ImplicitSurface surface;
  surface.construction = "slice";
  surface.inputs = {{"g", pair.g.to_string()}, {"h", pair.h.to_string()}};
  surface.seed = seed;
  surface.cleanup.push_back("resultant degree " + std::to_string(raw.total_degree()));
  surface.f = cleanup_surface(raw, surface.cleanup);
  surface.degree = surface.f.total_degree();
  validate_homogeneous(surface.f);
  validate_membership(surface, pair, validation_samples);
  return surface;
}

ImplicitSurface implicitize_ruled(const LineFamily& family, std::uint64_t seed,
                                  int validation_samples) {
  std::array<MultiPoly, 4> minors = ruling_minors(family);

  ImplicitSurface surface;
  surface.construction = "grassmann";
  surface.inputs = {{"f4", family.curve.f4.to_string()}, {"f5", family.curve.f5.to_string()}};
  surface.seed = seed;

  bool any_minor = false;
  std::vector<std::size_t> usable;
  for (std::size_t k = 0; k < 4; ++k) {
    if (minors[k].is_zero()) continue;
    any_minor = true;
    // Remove the w-content (gcd of the z-coefficients) of each minor; it only
    // contributes extraneous factors to the resultants.
    std::vector<MultiPoly> coeffs;
    for (const auto& var : kSurfaceVars) {
      auto c = minors[k].coefficients_in(var);
      if (c.size() > 1 && !c[1].is_zero()) coeffs.push_back(c[1]);
    }
    MultiPoly content = poly_gcd(coeffs);
    if (!content.is_constant()) {
      minors[k] = *divide_exact(minors[k], content);
      surface.cleanup.push_back("minor " + std::to_string(k) + ": removed w-content of degree " +
                                std::to_string(content.degree_in(kCurveVar)));
    }
    if (minors[k].degree_in(kCurveVar) >= 1) usable.push_back(k);
  }
  if (!any_minor)
    fail(ErrorKind::DegenerateParametrization, "all ruling minors vanish identically");
  if (usable.size() < 2)
    fail(ErrorKind::DegenerateParametrization,
         "ruling minors are constant in w; the family does not sweep a surface");

  MultiPoly acc;
  int resultants_used = 0;
  for (std::size_t x = 0; x < usable.size(); ++x) {
    for (std::size_t y = x + 1; y < usable.size(); ++y) {
      MultiPoly r = sylvester_resultant(minors[usable[x]], minors[usable[y]], kCurveVar);
      if (r.is_zero()) continue;
      validate_homogeneous(r);
      ++resultants_used;
      acc = acc.is_zero() ? r : poly_gcd(acc, r);
    }
  }
  if (resultants_used == 0)
    fail(ErrorKind::AllResultantsZero, "every minor-pair resultant vanishes identically");
  if (acc.is_constant())
    fail(ErrorKind::DegenerateParametrization, "minor resultants share no surface factor");
  surface.cleanup.push_back("gcd of " + std::to_string(resultants_used) +
                            " minor-pair resultants: degree " + std::to_string(acc.total_degree()));
  surface.f = cleanup_surface(acc, surface.cleanup);
  surface.degree = surface.f.total_degree();
  validate_homogeneous(surface.f);
  validate_membership(surface, family, validation_samples);
  return surface;
}

bool membership_check(const ImplicitSurface& surface, const SlicePair& pair, int samples,
                      Rng& rng) {
  if (samples < 1) fail(ErrorKind::Internal, "membership check requires samples >= 1");
  SurfaceParam param = twistor_lift(pair);
  for (int k = 0; k < samples; ++k) {
    ProjPoint z = sample_slice_point(param, rng, k);
    if (!eval_surface(surface.f, z).is_zero()) return false;
  }
  return true;
}

bool membership_check(const ImplicitSurface& surface, const LineFamily& family, int samples,
                      Rng& rng) {
  if (samples < 1) fail(ErrorKind::Internal, "membership check requires samples >= 1");
  for (int k = 0; k < samples; ++k) {
    ProjPoint z = sample_family_point(family, rng);
    if (!eval_surface(surface.f, z).is_zero()) return false;
  }
  return true;
}

}  // namespace twistor
