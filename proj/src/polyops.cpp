#include "twistor/polyops.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "twistor/errors.hpp"

namespace twistor {

namespace {

const MultiPoly kOne = MultiPoly::constant(GaussianRational(1));

std::map<std::string, std::uint32_t> lead_exponent_map(const MultiPoly& p) {
  std::map<std::string, std::uint32_t> m;
  const auto& vars = p.variables();
  const auto& exp = p.leading_exponents();
  for (std::size_t k = 0; k < vars.size(); ++k)
    if (exp[k] > 0) m[vars[k]] = exp[k];
  return m;
}

// Largest monomial dividing p, as exponent map.
std::map<std::string, std::uint32_t> monomial_content_map(const MultiPoly& p) {
  const auto& vars = p.variables();
  std::vector<std::uint32_t> mins(vars.size(), UINT32_MAX);
  for (const auto& [exp, coeff] : p.terms())
    for (std::size_t k = 0; k < exp.size(); ++k) mins[k] = std::min(mins[k], exp[k]);
  std::map<std::string, std::uint32_t> m;
  for (std::size_t k = 0; k < vars.size(); ++k)
    if (mins[k] > 0) m[vars[k]] = mins[k];
  return m;
}

MultiPoly monomial_from_map(const std::map<std::string, std::uint32_t>& m) {
  MultiPoly r = kOne;
  for (const auto& [var, e] : m) r = r * MultiPoly::monomial(var, e);
  return r;
}

int udeg(const std::vector<MultiPoly>& c) {
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
    if (!c[k].is_zero()) return k;
  return -1;
}

void utrim(std::vector<MultiPoly>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A  mod  B, on coefficient
// vectors in ascending degree. Requires deg B >= 0.
std::vector<MultiPoly> pseudo_remainder(std::vector<MultiPoly> A, const std::vector<MultiPoly>& B) {
  int db = udeg(B);
  const MultiPoly& lb = B[static_cast<std::size_t>(db)];
  int e = udeg(A) - db + 1;
  while (true) {
    int da = udeg(A);
    if (da < db) break;
    MultiPoly la = A[static_cast<std::size_t>(da)];
    for (auto& c : A) c = c * lb;
    for (int k = 0; k <= db; ++k)
      A[static_cast<std::size_t>(k + da - db)] -= la * B[static_cast<std::size_t>(k)];
    --e;
  }
  if (e > 0) {
    MultiPoly f = pow(lb, static_cast<std::uint32_t>(e));
    for (auto& c : A) c = c * f;
  }
  utrim(A);
  return A;
}

std::vector<MultiPoly> divide_coeffs_exact(const std::vector<MultiPoly>& c, const MultiPoly& d) {
  std::vector<MultiPoly> out;
  out.reserve(c.size());
  for (const auto& ck : c) {
    if (ck.is_zero()) {
      out.push_back(MultiPoly());
      continue;
    }
    auto q = divide_exact(ck, d);
    if (!q) fail(ErrorKind::Internal, "inexact division in polynomial remainder sequence");
    out.push_back(std::move(*q));
  }
  return out;
}

// Subresultant PRS gcd of polynomials primitive in x with positive x-degree.
MultiPoly gcd_primitive_prs(const MultiPoly& a, const MultiPoly& b, const std::string& x) {
  std::vector<MultiPoly> A = a.coefficients_in(x);
  std::vector<MultiPoly> B = b.coefficients_in(x);
  if (udeg(A) < udeg(B)) std::swap(A, B);
  MultiPoly g = kOne;
  MultiPoly h = kOne;
  while (true) {
    int delta = udeg(A) - udeg(B);
    std::vector<MultiPoly> R = pseudo_remainder(A, B);
    if (udeg(R) < 0) break;
    if (udeg(R) == 0) return kOne;  // primitive parts are coprime in x
    MultiPoly divisor = g * pow(h, static_cast<std::uint32_t>(delta));
    A = std::move(B);
    B = divide_coeffs_exact(R, divisor);
    g = A[static_cast<std::size_t>(udeg(A))];
    if (delta > 0) {
      auto q = divide_exact(pow(g, static_cast<std::uint32_t>(delta)),
                            pow(h, static_cast<std::uint32_t>(delta - 1)));
      if (!q) fail(ErrorKind::Internal, "inexact division updating subresultant factor");
      h = std::move(*q);
    }
  }
  // gcd = primitive part of B in x.
  MultiPoly content = kOne;
  {
    std::vector<MultiPoly> nonzero;
    for (const auto& c : B)
      if (!c.is_zero()) nonzero.push_back(c);
    content = poly_gcd(nonzero);
  }
  if (!(content == kOne)) B = divide_coeffs_exact(B, content);
  return MultiPoly::from_coefficients_in(x, B).monic();
}

// Univariate gcd over the coefficient field, for specialized images.
std::vector<GaussianRational> field_gcd_univar(std::vector<GaussianRational> u,
                                               std::vector<GaussianRational> v) {
  auto deg = [](const std::vector<GaussianRational>& c) {
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
      if (!c[k].is_zero()) return k;
    return -1;
  };
  while (deg(v) >= 0) {
    int dv = deg(v);
    // u mod v
    while (deg(u) >= dv) {
      int du = deg(u);
      GaussianRational f = u[static_cast<std::size_t>(du)] / v[static_cast<std::size_t>(dv)];
      for (int k = 0; k <= dv; ++k)
        u[static_cast<std::size_t>(k + du - dv)] -= f * v[static_cast<std::size_t>(k)];
      u[static_cast<std::size_t>(du)] = GaussianRational(0);
      while (!u.empty() && u.back().is_zero()) u.pop_back();
      if (u.empty()) break;
    }
    std::swap(u, v);
  }
  return u;
}

std::vector<GaussianRational> specialize_to_univar(const MultiPoly& p, const std::string& x,
                                                   const std::map<std::string, GaussianRational>& pt) {
  MultiPoly s = p.specialize(pt);
  int d = s.degree_in(x);
  std::vector<GaussianRational> c(static_cast<std::size_t>(std::max(d, 0)) + 1,
                                  GaussianRational(0));
  if (s.is_zero()) return {};
  auto coeffs = s.coefficients_in(x);
  for (std::size_t k = 0; k < coeffs.size(); ++k) c[k] = coeffs[k].constant_value();
  return c;
}

// Sound fast path: a degree-preserving specialization whose univariate gcd is
// constant proves the primitive gcd is 1.
bool coprime_by_specialization(const MultiPoly& a, const MultiPoly& b, const std::string& x) {
  std::vector<std::string> others;
  for (const auto& v : a.variables())
    if (v != x) others.push_back(v);
  for (const auto& v : b.variables())
    if (v != x && std::find(others.begin(), others.end(), v) == others.end()) others.push_back(v);
  if (others.empty()) return false;  // already univariate, run the PRS directly
  std::mt19937_64 eng(0x5eedULL);
  int da = a.degree_in(x);
  int db = b.degree_in(x);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::map<std::string, GaussianRational> pt;
    for (const auto& v : others) {
      long num = static_cast<long>(eng() % 19) - 9;
      long den = static_cast<long>(eng() % 4) + 1;
      pt[v] = GaussianRational(make_rational(num, den));
    }
    auto ua = specialize_to_univar(a, x, pt);
    auto ub = specialize_to_univar(b, x, pt);
    if (static_cast<int>(ua.size()) - 1 != da || static_cast<int>(ub.size()) - 1 != db) continue;
    if (ua.empty() || ub.empty()) continue;
    if (ua.back().is_zero() || ub.back().is_zero()) continue;
    auto g = field_gcd_univar(ua, ub);
    int dg = static_cast<int>(g.size()) - 1;
    while (dg >= 0 && g[static_cast<std::size_t>(dg)].is_zero()) --dg;
    return dg == 0;
  }
  return false;
}

std::vector<std::string> shared_variables(const MultiPoly& a, const MultiPoly& b) {
  std::vector<std::string> shared;
  std::set_intersection(a.variables().begin(), a.variables().end(), b.variables().begin(),
                        b.variables().end(), std::back_inserter(shared));
  return shared;
}

MultiPoly homogenize_total(const MultiPoly& p, const std::string& new_var) {
  if (p.is_zero()) return p;
  std::uint32_t d = static_cast<std::uint32_t>(p.total_degree());
  MultiPoly nv = MultiPoly::variable(new_var);
  MultiPoly total;
  for (const auto& [exp, coeff] : p.terms()) {
    std::uint64_t e = 0;
    for (auto x : exp) e += x;
    MultiPoly term = MultiPoly::from_terms(p.variables(), {{exp, coeff}});
    total += term * pow(nv, d - static_cast<std::uint32_t>(e));
  }
  return total;
}

}  // namespace

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) return std::nullopt;
  if (p.is_zero()) return MultiPoly();
  if (d.is_constant()) return p * d.constant_value().inverse();
  MultiPoly r = p;
  MultiPoly q;
  auto dlead = lead_exponent_map(d);
  const GaussianRational& dc = d.leading_coefficient();
  while (!r.is_zero()) {
    auto rlead = lead_exponent_map(r);
    std::map<std::string, std::uint32_t> diff = rlead;
    bool divisible = true;
    for (const auto& [var, e] : dlead) {
      auto it = rlead.find(var);
      if (it == rlead.end() || it->second < e) {
        divisible = false;
        break;
      }
      if (it->second == e)
        diff.erase(var);
      else
        diff[var] = it->second - e;
    }
    if (!divisible) return std::nullopt;
    MultiPoly t = monomial_from_map(diff) * (r.leading_coefficient() / dc);
    q += t;
    r -= t * d;
  }
  return q;
}

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return kOne;

  // Split off the largest common monomial first.
  auto mono_a = monomial_content_map(a);
  auto mono_b = monomial_content_map(b);
  std::map<std::string, std::uint32_t> mono_common;
  for (const auto& [var, e] : mono_a) {
    auto it = mono_b.find(var);
    if (it != mono_b.end()) mono_common[var] = std::min(e, it->second);
  }
  MultiPoly ared = a;
  MultiPoly bred = b;
  if (!mono_a.empty()) {
    auto q = divide_exact(a, monomial_from_map(mono_a));
    ared = std::move(*q);
  }
  if (!mono_b.empty()) {
    auto q = divide_exact(b, monomial_from_map(mono_b));
    bred = std::move(*q);
  }
  MultiPoly common = monomial_from_map(mono_common);
  if (ared.is_constant() || bred.is_constant()) return common.monic();

  std::vector<std::string> shared = shared_variables(ared, bred);
  if (shared.empty()) return common.monic();

  // Homogeneous inputs reduce to one fewer variable on an affine chart.
  if (ared.variables().size() >= 2 && ared.is_homogeneous() && bred.is_homogeneous()) {
    const std::string& x0 = shared.front();
    std::map<std::string, GaussianRational> chart{{x0, GaussianRational(1)}};
    MultiPoly g_affine = poly_gcd(ared.specialize(chart), bred.specialize(chart));
    if (g_affine.is_constant()) return common.monic();
    return (common * homogenize_total(g_affine, x0)).monic();
  }

  // Main variable: smallest combined degree keeps the remainder sequence short.
  std::string x = shared.front();
  int best = ared.degree_in(x) + bred.degree_in(x);
  for (const auto& v : shared) {
    int d = ared.degree_in(v) + bred.degree_in(v);
    if (d < best) {
      best = d;
      x = v;
    }
  }

  MultiPoly ca = content_in(ared, x);
  MultiPoly cb = content_in(bred, x);
  MultiPoly c = poly_gcd(ca, cb);
  MultiPoly ap = ared;
  MultiPoly bp = bred;
  if (!(ca == kOne)) ap = *divide_exact(ared, ca);
  if (!(cb == kOne)) bp = *divide_exact(bred, cb);

  if (coprime_by_specialization(ap, bp, x)) return (common * c).monic();

  MultiPoly g = gcd_primitive_prs(ap, bp, x);
  return (common * c * g).monic();
}

MultiPoly poly_gcd(const std::vector<MultiPoly>& polys) {
  MultiPoly g;
  for (const auto& p : polys) {
    g = poly_gcd(g, p);
    if (g == kOne) return g;
  }
  return g;
}

MultiPoly content_in(const MultiPoly& p, const std::string& var) {
  if (p.is_zero()) return MultiPoly();
  std::vector<MultiPoly> coeffs = p.coefficients_in(var);
  std::vector<MultiPoly> nonzero;
  for (auto& c : coeffs)
    if (!c.is_zero()) nonzero.push_back(std::move(c));
  return poly_gcd(nonzero);
}

MultiPoly primitive_part_in(const MultiPoly& p, const std::string& var) {
  if (p.is_zero()) return p;
  MultiPoly c = content_in(p, var);
  if (c == kOne) return p;
  return *divide_exact(p, c);
}

MultiPoly squarefree_part(const MultiPoly& p, const std::string& var) {
  if (p.is_zero()) fail(ErrorKind::Internal, "squarefree part of zero polynomial");
  MultiPoly d = p.derivative(var);
  if (d.is_zero()) return kOne;  // constant in var, no roots to keep
  MultiPoly g = poly_gcd(p, d);
  if (g.is_constant()) return p.monic();
  auto q = divide_exact(p, g);
  if (!q) fail(ErrorKind::Internal, "gcd does not divide its argument");
  return q->monic();
}

MultiPoly radical(const MultiPoly& p) {
  if (p.is_zero()) return p;
  if (p.is_constant()) return kOne;
  MultiPoly g = p;
  for (const auto& v : p.variables()) {
    g = poly_gcd(g, p.derivative(v));
    if (g.is_constant()) return p.monic();
  }
  auto q = divide_exact(p, g);
  if (!q) fail(ErrorKind::Internal, "gcd does not divide its argument");
  return q->monic();
}

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) fail(ErrorKind::Internal, "determinant of non-square matrix");
  if (n == 0) return kOne;
  if (n == 1) return m[0][0];
  bool negate = false;
  MultiPoly prev = kOne;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return MultiPoly();
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        if (prev == kOne) {
          m[i][j] = std::move(num);
        } else {
          auto q = divide_exact(num, prev);
          if (!q) fail(ErrorKind::Internal, "inexact division in Bareiss elimination");
          m[i][j] = std::move(*q);
        }
      }
      m[i][k] = MultiPoly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

MultiPoly sylvester_resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
  int dp = p.degree_in(var);
  int dq = q.degree_in(var);
  if (dp < 1)
    fail(ErrorKind::ZeroDegree, "first polynomial has no positive degree in '" + var + "'");
  if (dq < 1)
    fail(ErrorKind::ZeroDegree, "second polynomial has no positive degree in '" + var + "'");
  std::vector<MultiPoly> pc = p.coefficients_in(var);
  std::vector<MultiPoly> qc = q.coefficients_in(var);
  std::size_t n = static_cast<std::size_t>(dp + dq);
  std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n));
  for (int r = 0; r < dq; ++r)
    for (int k = 0; k <= dp; ++k) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] =
        pc[static_cast<std::size_t>(dp - k)];
  for (int r = 0; r < dp; ++r)
    for (int k = 0; k <= dq; ++k)
      m[static_cast<std::size_t>(dq + r)][static_cast<std::size_t>(r + k)] =
          qc[static_cast<std::size_t>(dq - k)];
  return bareiss_determinant(std::move(m));
}

int distinct_root_count(const MultiPoly& p, const std::string& var) {
  if (p.is_zero()) fail(ErrorKind::Internal, "root count of zero polynomial");
  if (p.degree_in(var) == 0) return 0;
  return squarefree_part(p, var).degree_in(var);
}

}  // namespace twistor
