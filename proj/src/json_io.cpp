#include "twistor/json_io.hpp"

#include "twistor/errors.hpp"

namespace twistor {

namespace {

const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorKind::SyntaxError, std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

std::vector<GaussianRational> gaussian_array(const Json& j, std::size_t expected) {
  if (!j.is_array() || j.size() != expected)
    fail(ErrorKind::SyntaxError, "expected an array of " + std::to_string(expected) + " complex numbers");
  std::vector<GaussianRational> out;
  out.reserve(expected);
  for (const auto& e : j) out.push_back(gaussian_from_json(e));
  return out;
}

}  // namespace

Json to_json(const GaussianRational& z) {
  return Json{{"re", render_rational(z.re)}, {"im", render_rational(z.im)}};
}

GaussianRational gaussian_from_json(const Json& j) {
  if (j.is_string()) return GaussianRational(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return GaussianRational(make_rational(j.get<long>()));
  Rational re = parse_rational(require_field(j, "re").get<std::string>());
  Rational im(0);
  if (j.contains("im")) im = parse_rational(j.at("im").get<std::string>());
  return GaussianRational(std::move(re), std::move(im));
}

Json to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [exp, coeff] : p.terms()) {
    Json e = Json::array();
    for (auto x : exp) e.push_back(x);
    terms.push_back(Json{{"exp", std::move(e)},
                         {"re", render_rational(coeff.re)},
                         {"im", render_rational(coeff.im)}});
  }
  return Json{{"variables", p.variables()}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const Json& j) {
  std::vector<std::string> vars =
      require_field(j, "variables").get<std::vector<std::string>>();
  MultiPoly::TermMap terms;
  for (const auto& t : require_field(j, "terms")) {
    ExpVec e;
    for (const auto& x : require_field(t, "exp")) e.push_back(x.get<std::uint32_t>());
    if (e.size() != vars.size())
      fail(ErrorKind::SyntaxError, "exponent vector length does not match variable count");
    GaussianRational c(parse_rational(require_field(t, "re").get<std::string>()),
                       parse_rational(require_field(t, "im").get<std::string>()));
    auto [it, inserted] = terms.emplace(std::move(e), c);
    if (!inserted) it->second += c;
  }
  return MultiPoly::from_terms(std::move(vars), std::move(terms));
}

Json to_json(const Line3& line) {
  Json a = Json::array();
  Json b = Json::array();
  for (std::size_t k = 0; k < 4; ++k) {
    a.push_back(to_json(line.a[k]));
    b.push_back(to_json(line.b[k]));
  }
  return Json{{"A", std::move(a)}, {"B", std::move(b)}};
}

Line3 line_from_json(const Json& j) {
  auto a = gaussian_array(require_field(j, "A"), 4);
  auto b = gaussian_array(require_field(j, "B"), 4);
  return Line3(ProjPoint(std::move(a)), ProjPoint(std::move(b)));
}

Json to_json(const PlueckerPoint& p) {
  Json t = Json::array();
  for (std::size_t k = 0; k < 6; ++k) t.push_back(to_json(p[k]));
  return Json{{"t", std::move(t)}};
}

PlueckerPoint pluecker_from_json(const Json& j) {
  auto t = gaussian_array(require_field(j, "t"), 6);
  Vec6 v;
  std::move(t.begin(), t.end(), v.begin());
  return PlueckerPoint(std::move(v));
}

Json to_json(const TwistorCertificate& cert) {
  Json out;
  out["pluecker"] = to_json(cert.pluecker);
  out["is_twistor"] = cert.is_twistor;
  out["lambda"] = cert.lambda ? to_json(*cert.lambda) : Json(nullptr);
  out["violating_minor"] =
      cert.violating_minor
          ? Json::array({cert.violating_minor->first, cert.violating_minor->second})
          : Json(nullptr);
  if (cert.normal_form) {
    Json nf = Json::array();
    for (const auto& z : *cert.normal_form) nf.push_back(to_json(z));
    out["normal_form"] = std::move(nf);
  } else {
    out["normal_form"] = nullptr;
  }
  return out;
}

Json to_json(const ImplicitSurface& surface) {
  Json out;
  out["F"] = to_json(surface.f);
  out["degree"] = surface.degree;
  out["cleanup"] = surface.cleanup;
  out["provenance"] = Json{{"construction", surface.construction},
                           {"inputs", surface.inputs},
                           {"seed", surface.seed}};
  return out;
}

ImplicitSurface surface_from_json(const Json& j) {
  ImplicitSurface s;
  s.f = poly_from_json(require_field(j, "F"));
  s.degree = require_field(j, "degree").get<int>();
  if (j.contains("cleanup")) s.cleanup = j.at("cleanup").get<std::vector<std::string>>();
  if (j.contains("provenance")) {
    const Json& p = j.at("provenance");
    if (p.contains("construction")) s.construction = p.at("construction").get<std::string>();
    if (p.contains("inputs"))
      s.inputs = p.at("inputs").get<std::map<std::string, std::string>>();
    if (p.contains("seed")) s.seed = p.at("seed").get<std::uint64_t>();
  }
  return s;
}

Json to_json(const Certificate& cert) {
  Json fibers = Json::array();
  for (const auto& s : cert.fibers) {
    fibers.push_back(Json{{"parameter", to_json(s.parameter)},
                          {"certificate", to_json(s.cert)},
                          {"on_surface", s.on_surface}});
  }
  Json out;
  out["degree"] = cert.degree;
  out["parity_ok"] = cert.parity_ok;
  out["j_invariance"] =
      Json{{"holds", cert.j.holds},
           {"lambda", cert.j.holds ? to_json(cert.j.lambda) : Json(nullptr)}};
  out["twistor_fibers"] = std::move(fibers);
  out["fiber_count"] = cert.fiber_count ? Json(*cert.fiber_count) : Json("not probed");
  out["seed"] = cert.seed;
  out["construction"] = cert.construction;
  out["inputs"] = cert.inputs;
  return out;
}

}  // namespace twistor
