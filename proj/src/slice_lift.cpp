#include "twistor/slice_lift.hpp"

#include <algorithm>
#include <map>

#include "twistor/errors.hpp"

namespace twistor {

MultiPoly hat_conj(const MultiPoly& g) { return g.conj_coefficients(); }

SlicePair make_slice_pair(MultiPoly g, MultiPoly h) {
  for (const MultiPoly* p : {&g, &h}) {
    for (const auto& var : p->variables())
      if (var != kSliceVar)
        fail(ErrorKind::Internal, "slice polynomial uses variable '" + var + "', expected only '" +
                                      std::string(kSliceVar) + "'");
  }
  int m = std::max(g.degree_in(kSliceVar), h.degree_in(kSliceVar));
  if (m < 1)
    fail(ErrorKind::DegenerateLift, "max(deg g, deg h) must be >= 1");
  SlicePair pair{std::move(g), std::move(h), MultiPoly(), MultiPoly(),
                 static_cast<std::uint32_t>(m)};
  pair.g_hat = hat_conj(pair.g);
  pair.h_hat = hat_conj(pair.h);
  return pair;
}

SurfaceParam twistor_lift(const SlicePair& pair) {
  if (pair.m < 1) fail(ErrorKind::DegenerateLift, "lift needs degree >= 1");
  MultiPoly s = MultiPoly::variable(kLiftS);
  MultiPoly u = MultiPoly::variable(kLiftU);
  MultiPoly v0m = MultiPoly::monomial(kLiftV0, pair.m);
  MultiPoly big_g = pair.g.homogenize(kSliceVar, kLiftV0, pair.m);
  MultiPoly big_h = pair.h.homogenize(kSliceVar, kLiftV0, pair.m);
  MultiPoly big_g_hat = pair.g_hat.homogenize(kSliceVar, kLiftV0, pair.m);
  MultiPoly big_h_hat = pair.h_hat.homogenize(kSliceVar, kLiftV0, pair.m);
  // The homogenization lifts v^k to v^k*v0^(m-k); rename v to v1.
  std::map<std::string, MultiPoly> rename{{kSliceVar, MultiPoly::variable(kLiftV1)}};
  big_g = big_g.substitute(rename);
  big_h = big_h.substitute(rename);
  big_g_hat = big_g_hat.substitute(rename);
  big_h_hat = big_h_hat.substitute(rename);
  SurfaceParam param;
  param.m = pair.m;
  param.p[0] = s * v0m;
  param.p[1] = u * v0m;
  param.p[2] = s * big_g - u * big_h_hat;
  param.p[3] = s * big_h + u * big_g_hat;
  return param;
}

Line3 ruling_line(const SurfaceParam& param, const GaussianRational& v) {
  std::map<std::string, GaussianRational> at_10{{kLiftS, GaussianRational(1)},
                                                {kLiftU, GaussianRational(0)},
                                                {kLiftV0, GaussianRational(1)},
                                                {kLiftV1, v}};
  std::map<std::string, GaussianRational> at_01 = at_10;
  at_01[kLiftS] = GaussianRational(0);
  at_01[kLiftU] = GaussianRational(1);
  std::vector<GaussianRational> a(4), b(4);
  for (std::size_t k = 0; k < 4; ++k) {
    a[k] = param.p[k].eval(at_10);
    b[k] = param.p[k].eval(at_01);
  }
  return Line3(ProjPoint(std::move(a)), ProjPoint(std::move(b)));
}

}  // namespace twistor
