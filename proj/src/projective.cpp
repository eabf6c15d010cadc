#include "twistor/projective.hpp"

#include <algorithm>

#include "twistor/errors.hpp"

namespace twistor {

ProjPoint::ProjPoint(std::vector<GaussianRational> c) : coords(std::move(c)) {
  if (coords.size() < 2) fail(ErrorKind::Internal, "projective point needs at least 2 coordinates");
  if (std::all_of(coords.begin(), coords.end(),
                  [](const GaussianRational& z) { return z.is_zero(); }))
    fail(ErrorKind::ZeroPoint, "all homogeneous coordinates are zero");
}

ProjPoint::ProjPoint(GaussianRational z0, GaussianRational z1, GaussianRational z2,
                     GaussianRational z3)
    : ProjPoint(std::vector<GaussianRational>{std::move(z0), std::move(z1), std::move(z2),
                                              std::move(z3)}) {}

ProjPoint ProjPoint::conj() const {
  std::vector<GaussianRational> c;
  c.reserve(coords.size());
  for (const auto& z : coords) c.push_back(z.conj());
  return ProjPoint(std::move(c));
}

bool ProjPoint::proportional_coords(const std::vector<GaussianRational>& a,
                                    const std::vector<GaussianRational>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const ProjPoint& p) {
  os << "[";
  for (std::size_t k = 0; k < p.coords.size(); ++k) {
    if (k) os << " : ";
    os << p.coords[k];
  }
  return os << "]";
}

Line3::Line3(ProjPoint a_, ProjPoint b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a.dim() != 4 || b.dim() != 4)
    fail(ErrorKind::Internal, "lines live in CP^3, expected 4 coordinates");
  if (ProjPoint::proportional_coords(a.coords, b.coords))
    fail(ErrorKind::DependentPoints, "spanning points are proportional");
}

ProjPoint Line3::at(const GaussianRational& s, const GaussianRational& u) const {
  std::vector<GaussianRational> c(4);
  for (std::size_t k = 0; k < 4; ++k) c[k] = s * a.coords[k] + u * b.coords[k];
  return ProjPoint(std::move(c));
}

bool operator==(const Line3& x, const Line3& y) {
  return pluecker_embed(x) == pluecker_embed(y);
}

PlueckerPoint::PlueckerPoint(Vec6 t_) : t(std::move(t_)) {
  if (std::all_of(t.begin(), t.end(), [](const GaussianRational& z) { return z.is_zero(); }))
    fail(ErrorKind::ZeroPoint, "all Plücker coordinates are zero");
  if (!pluecker_relation(t).is_zero())
    fail(ErrorKind::NotOnGrassmannian, "Plücker relation t1*t6 - t2*t5 + t3*t4 = 0 fails");
}

bool PlueckerPoint::proportional6(const Vec6& a, const Vec6& b) {
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const PlueckerPoint& p) {
  os << "[";
  for (std::size_t k = 0; k < 6; ++k) {
    if (k) os << " : ";
    os << p.t[k];
  }
  return os << "]";
}

GaussianRational pluecker_relation(const Vec6& t) {
  return t[0] * t[5] - t[1] * t[4] + t[2] * t[3];
}

PlueckerPoint pluecker_embed(const Line3& line) {
  const auto& a = line.a.coords;
  const auto& b = line.b.coords;
  auto minor = [&](std::size_t p, std::size_t q) { return a[p] * b[q] - a[q] * b[p]; };
  Vec6 t{minor(0, 1), minor(0, 2), minor(0, 3), minor(1, 2), minor(1, 3), minor(2, 3)};
  return PlueckerPoint(std::move(t));
}

Line3 pluecker_extract(const PlueckerPoint& p) {
  // Antisymmetric matrix M[a][b] = p_ab; nonzero columns span the line.
  const auto& t = p.t;
  GaussianRational zero(0);
  std::array<std::array<GaussianRational, 4>, 4> m{{
      {zero, t[0], t[1], t[2]},
      {-t[0], zero, t[3], t[4]},
      {-t[1], -t[3], zero, t[5]},
      {-t[2], -t[4], -t[5], zero},
  }};
  auto column = [&](std::size_t j) {
    std::vector<GaussianRational> c(4);
    for (std::size_t r = 0; r < 4; ++r) c[r] = m[r][j];
    return c;
  };
  for (std::size_t i = 0; i < 4; ++i) {
    auto ci = column(i);
    if (std::all_of(ci.begin(), ci.end(), [](const GaussianRational& z) { return z.is_zero(); }))
      continue;
    for (std::size_t j = i + 1; j < 4; ++j) {
      auto cj = column(j);
      if (std::all_of(cj.begin(), cj.end(), [](const GaussianRational& z) { return z.is_zero(); }))
        continue;
      if (!ProjPoint::proportional_coords(ci, cj))
        return Line3(ProjPoint(std::move(ci)), ProjPoint(std::move(cj)));
    }
  }
  fail(ErrorKind::RankError, "no pair of independent columns");
}

ProjPoint j_involution(const ProjPoint& z) {
  if (z.dim() != 4) fail(ErrorKind::Internal, "j acts on CP^3, expected 4 coordinates");
  const auto& c = z.coords;
  return ProjPoint(-c[1].conj(), c[0].conj(), -c[3].conj(), c[2].conj());
}

ProjPoint sigma_cp3(const ProjPoint& z) {
  if (z.dim() != 4) fail(ErrorKind::Internal, "sigma acts on CP^3, expected 4 coordinates");
  const auto& c = z.coords;
  return ProjPoint(-c[1], c[0], -c[3], c[2]);
}

Vec6 sigma_cp5(const Vec6& t) {
  return Vec6{t[0], t[4], -t[3], -t[2], t[1], t[5]};
}

PlueckerPoint j_grassmann(const PlueckerPoint& p) {
  Vec6 s = sigma_cp5(p.t);
  for (auto& z : s) z = z.conj();
  return PlueckerPoint(std::move(s));
}

}  // namespace twistor
