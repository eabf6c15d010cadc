#include "twistor/grassmann.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "twistor/errors.hpp"
#include "twistor/polyops.hpp"

namespace twistor {

namespace {

const GaussianRational kZero(0);

// Columns of the antisymmetric matrix M[a][b] = t_ab.
std::array<std::array<MultiPoly, 4>, 4> pluecker_matrix_columns(const std::array<MultiPoly, 6>& t) {
  std::array<std::array<MultiPoly, 4>, 4> m;  // m[row][col]
  auto set = [&](std::size_t r, std::size_t c, const MultiPoly& v) {
    m[r][c] = v;
    m[c][r] = -v;
  };
  set(0, 1, t[0]);
  set(0, 2, t[1]);
  set(0, 3, t[2]);
  set(1, 2, t[3]);
  set(1, 3, t[4]);
  set(2, 3, t[5]);
  std::array<std::array<MultiPoly, 4>, 4> cols;
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t r = 0; r < 4; ++r) cols[c][r] = m[r][c];
  return cols;
}

int column_degree(const std::array<MultiPoly, 4>& col) {
  int d = -1;
  for (const auto& e : col) d = std::max(d, e.degree_in(kCurveVar));
  return d;
}

std::array<MultiPoly, 4> remove_column_content(std::array<MultiPoly, 4> col) {
  std::vector<MultiPoly> nonzero;
  for (const auto& e : col)
    if (!e.is_zero()) nonzero.push_back(e);
  if (nonzero.empty()) return col;
  MultiPoly c = poly_gcd(nonzero);
  if (c.is_constant()) return col;
  for (auto& e : col) {
    if (e.is_zero()) continue;
    e = *divide_exact(e, c);
  }
  return col;
}

MultiPoly rename_variable(const MultiPoly& p, const std::string& from, const std::string& to) {
  std::map<std::string, MultiPoly> images{{from, MultiPoly::variable(to)}};
  return p.substitute(images);
}

}  // namespace

ECurve e_curve(MultiPoly f4, MultiPoly f5) {
  for (const MultiPoly* p : {&f4, &f5}) {
    for (const auto& var : p->variables())
      if (var != kCurveVar)
        fail(ErrorKind::Internal, "curve polynomial uses variable '" + var + "', expected only '" +
                                      std::string(kCurveVar) + "'");
    for (const auto& [exp, coeff] : p->terms())
      if (!coeff.is_real())
        fail(ErrorKind::NonRealCoefficients, "f4 and f5 must have real rational coefficients");
  }
  if (f4.degree_in(kCurveVar) < 1 && f5.degree_in(kCurveVar) < 1)
    fail(ErrorKind::BothConstant, "at least one of f4, f5 must be non-constant");
  ECurve curve;
  curve.t = {f4 * f4 + f5 * f5, f5, -f4, f4, f5, MultiPoly::constant(GaussianRational(1))};
  curve.f4 = std::move(f4);
  curve.f5 = std::move(f5);
  return curve;
}

Vec6 e_curve_at(const ECurve& curve, const GaussianRational& w) {
  std::map<std::string, GaussianRational> point{{kCurveVar, w}};
  Vec6 out;
  for (std::size_t k = 0; k < 6; ++k) out[k] = curve.t[k].eval(point);
  return out;
}

LineFamily line_family(const ECurve& curve, Rng& rng) {
  auto cols = pluecker_matrix_columns(curve.t);
  // t index for the column pair (i, j), i < j.
  auto pair_coordinate = [&](std::size_t i, std::size_t j) -> const MultiPoly& {
    static const std::size_t idx[4][4] = {{9, 0, 1, 2}, {9, 9, 3, 4}, {9, 9, 9, 5}, {9, 9, 9, 9}};
    return curve.t[idx[i][j]];
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) pairs.emplace_back(i, j);
  std::sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
    return std::max(column_degree(cols[x.first]), column_degree(cols[x.second])) <
           std::max(column_degree(cols[y.first]), column_degree(cols[y.second]));
  });
  for (const auto& [i, j] : pairs) {
    if (pair_coordinate(i, j).is_zero()) continue;  // columns generically dependent
    std::array<MultiPoly, 4> a = remove_column_content(cols[i]);
    std::array<MultiPoly, 4> b = remove_column_content(cols[j]);
    // Randomized confirmation at a random rational parameter.
    for (int attempt = 0; attempt < 8; ++attempt) {
      GaussianRational w(rng.rational());
      std::map<std::string, GaussianRational> point{{kCurveVar, w}};
      std::vector<GaussianRational> av(4), bv(4);
      for (std::size_t k = 0; k < 4; ++k) {
        av[k] = a[k].is_zero() ? kZero : a[k].eval(point);
        bv[k] = b[k].is_zero() ? kZero : b[k].eval(point);
      }
      bool a_zero = std::all_of(av.begin(), av.end(), [](const auto& z) { return z.is_zero(); });
      bool b_zero = std::all_of(bv.begin(), bv.end(), [](const auto& z) { return z.is_zero(); });
      if (a_zero || b_zero || ProjPoint::proportional_coords(av, bv)) continue;
      LineFamily family;
      family.curve = curve;
      family.a = std::move(a);
      family.b = std::move(b);
      family.columns = {i, j};
      family.pair_pluecker = pair_coordinate(i, j);
      return family;
    }
  }
  fail(ErrorKind::RankCollapse, "no generically independent column pair");
}

Line3 family_line_at(const LineFamily& family, const GaussianRational& w) {
  std::map<std::string, GaussianRational> point{{kCurveVar, w}};
  std::vector<GaussianRational> av(4), bv(4);
  for (std::size_t k = 0; k < 4; ++k) {
    av[k] = family.a[k].is_zero() ? kZero : family.a[k].eval(point);
    bv[k] = family.b[k].is_zero() ? kZero : family.b[k].eval(point);
  }
  return Line3(ProjPoint(std::move(av)), ProjPoint(std::move(bv)));
}

bool injectivity_probe(const ECurve& curve, int trials, Rng& rng) {
  if (trials < 1) fail(ErrorKind::Internal, "injectivity probe needs trials >= 1");
  // Sampled proportionality checks.
  for (int trial = 0; trial < trials; ++trial) {
    GaussianRational w1(rng.rational());
    GaussianRational w2(rng.rational());
    if (w1 == w2) continue;
    Vec6 t1 = e_curve_at(curve, w1);
    Vec6 t2 = e_curve_at(curve, w2);
    if (PlueckerPoint::proportional6(t1, t2)) return false;
  }
  // Exact collision-locus criterion. Every minor of the pair t(w1), t(w2)
  // vanishes on the diagonal; after dividing by (w1 - w2) a nonconstant gcd
  // is a curve of collisions, so the sweep is generically >1:1.
  std::array<MultiPoly, 6> t1, t2;
  for (std::size_t k = 0; k < 6; ++k) {
    t1[k] = rename_variable(curve.t[k], kCurveVar, "w1");
    t2[k] = rename_variable(curve.t[k], kCurveVar, "w2");
  }
  MultiPoly diagonal = MultiPoly::variable("w1") - MultiPoly::variable("w2");
  MultiPoly gcd_acc;
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = a + 1; b < 6; ++b) {
      MultiPoly minor = t1[a] * t2[b] - t1[b] * t2[a];
      if (minor.is_zero()) continue;
      auto reduced = divide_exact(minor, diagonal);
      if (!reduced) fail(ErrorKind::Internal, "collision minor not divisible by the diagonal");
      gcd_acc = poly_gcd(gcd_acc, *reduced);
      if (gcd_acc.is_constant()) return true;
    }
  }
  // All minors identically zero means the whole sweep is one point.
  return !gcd_acc.is_zero() && gcd_acc.is_constant();
}

}  // namespace twistor
