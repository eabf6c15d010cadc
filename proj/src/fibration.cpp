#include "twistor/fibration.hpp"

#include <vector>

#include "twistor/errors.hpp"

namespace twistor {

HPoint twistor_project(const ProjPoint& z) {
  if (z.dim() != 4) fail(ErrorKind::Internal, "twistor projection expects 4 coordinates");
  Quaternion q0 = Quaternion::from_complex_pair(z[0], z[1]);
  Quaternion q1 = Quaternion::from_complex_pair(z[2], z[3]);
  return HPoint(std::move(q0), std::move(q1)).normalized();
}

Line3 fiber_through(const ProjPoint& z) {
  return Line3(z, j_involution(z));
}

Line3 fiber_over(const HPoint& q) {
  // q0 = a + b*j, q1 = c + d*j with complex a, b, c, d.
  GaussianRational a(q.q0.r, q.q0.i);
  GaussianRational b(q.q0.j, q.q0.k);
  GaussianRational c(q.q1.r, q.q1.i);
  GaussianRational d(q.q1.j, q.q1.k);
  return fiber_through(ProjPoint(std::move(a), std::move(b), std::move(c), std::move(d)));
}

namespace {

// Rescaling mu with j_grassmann(mu*t) = mu*t exactly. When j(t) = lambda*t the
// lift-level involution forces |lambda| = 1, and one of these candidates
// always satisfies mu/conj(mu) = lambda:
//   t1 != 0: mu = conj(t1)            t6 != 0: mu = conj(t6)
//   t2 != 0: mu = conj(t2)+conj(t5) or i*(conj(t2)-conj(t5))
//   t3 != 0: mu = conj(t3)-conj(t4) or i*(conj(t3)+conj(t4))
std::optional<Vec6> fixed_normal_form(const Vec6& t) {
  GaussianRational iu = GaussianRational::unit_i();
  std::vector<GaussianRational> candidates;
  if (!t[0].is_zero()) candidates.push_back(t[0].conj());
  if (!t[5].is_zero()) candidates.push_back(t[5].conj());
  if (!t[1].is_zero() || !t[4].is_zero()) {
    candidates.push_back(t[1].conj() + t[4].conj());
    candidates.push_back(iu * (t[1].conj() - t[4].conj()));
  }
  if (!t[2].is_zero() || !t[3].is_zero()) {
    candidates.push_back(t[2].conj() - t[3].conj());
    candidates.push_back(iu * (t[2].conj() + t[3].conj()));
  }
  for (const auto& mu : candidates) {
    if (mu.is_zero()) continue;
    Vec6 n;
    for (std::size_t k = 0; k < 6; ++k) n[k] = mu * t[k];
    Vec6 jn = sigma_cp5(n);
    bool fixed = true;
    for (std::size_t k = 0; k < 6 && fixed; ++k) fixed = (jn[k].conj() == n[k]);
    if (fixed) return n;
  }
  return std::nullopt;
}

}  // namespace

TwistorCertificate is_twistor_line(const PlueckerPoint& t) {
  PlueckerPoint image = j_grassmann(t);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      GaussianRational minor = t[i] * image[j] - t[j] * image[i];
      if (!minor.is_zero()) {
        return TwistorCertificate{t, false, std::nullopt, std::make_pair(i, j), std::nullopt};
      }
    }
  }
  // Fixed point: read lambda off the first nonzero coordinate.
  GaussianRational lambda;
  for (std::size_t k = 0; k < 6; ++k) {
    if (!t[k].is_zero()) {
      lambda = image[k] / t[k];
      break;
    }
  }
  return TwistorCertificate{t, true, lambda, std::nullopt, fixed_normal_form(t.t)};
}

}  // namespace twistor
