#include "twistor/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "twistor/errors.hpp"

namespace twistor {

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
  std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(GaussianRational c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.emplace(ExpVec{}, std::move(c));
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
  return monomial(name, 1);
}

MultiPoly MultiPoly::monomial(const std::string& name, std::uint32_t power,
                              GaussianRational coeff) {
  MultiPoly p;
  if (coeff.is_zero()) return p;
  if (power == 0) return constant(std::move(coeff));
  p.vars_ = {name};
  p.terms_.emplace(ExpVec{power}, std::move(coeff));
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars, TermMap terms) {
  MultiPoly p;
  p.vars_ = std::move(vars);
  p.terms_ = std::move(terms);
  // Sort the variable list and permute exponents accordingly.
  std::vector<std::size_t> order(p.vars_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return p.vars_[a] < p.vars_[b]; });
  bool sorted = std::is_sorted(order.begin(), order.end());
  if (!sorted) {
    std::vector<std::string> sorted_vars(p.vars_.size());
    for (std::size_t k = 0; k < order.size(); ++k) sorted_vars[k] = p.vars_[order[k]];
    for (std::size_t k = 1; k < sorted_vars.size(); ++k)
      if (sorted_vars[k] == sorted_vars[k - 1])
        fail(ErrorKind::Internal, "duplicate variable '" + sorted_vars[k] + "'");
    TermMap remapped;
    for (const auto& [exp, coeff] : p.terms_) {
      if (exp.size() != p.vars_.size())
        fail(ErrorKind::Internal, "exponent vector length mismatch");
      ExpVec e(exp.size());
      for (std::size_t k = 0; k < order.size(); ++k) e[k] = exp[order[k]];
      remapped.emplace(std::move(e), coeff);
    }
    p.vars_ = std::move(sorted_vars);
    p.terms_ = std::move(remapped);
  } else {
    for (std::size_t k = 1; k < p.vars_.size(); ++k)
      if (p.vars_[k] == p.vars_[k - 1])
        fail(ErrorKind::Internal, "duplicate variable '" + p.vars_[k] + "'");
    for (const auto& [exp, coeff] : p.terms_)
      if (exp.size() != p.vars_.size())
        fail(ErrorKind::Internal, "exponent vector length mismatch");
  }
  p.canonicalize();
  return p;
}

void MultiPoly::canonicalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  if (vars_.empty()) return;
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [exp, coeff] : terms_)
    for (std::size_t k = 0; k < exp.size(); ++k)
      if (exp[k] > 0) used[k] = true;
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  std::vector<std::string> kept;
  for (std::size_t k = 0; k < vars_.size(); ++k)
    if (used[k]) kept.push_back(vars_[k]);
  TermMap stripped;
  for (const auto& [exp, coeff] : terms_) {
    ExpVec e;
    e.reserve(kept.size());
    for (std::size_t k = 0; k < exp.size(); ++k)
      if (used[k]) e.push_back(exp[k]);
    stripped.emplace(std::move(e), coeff);
  }
  vars_ = std::move(kept);
  terms_ = std::move(stripped);
}

GaussianRational MultiPoly::constant_value() const {
  if (is_zero()) return GaussianRational(0);
  if (!is_constant()) fail(ErrorKind::Internal, "constant_value of nonconstant polynomial");
  return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
  if (is_zero()) return -1;
  const ExpVec& lead = terms_.rbegin()->first;
  return static_cast<int>(std::accumulate(lead.begin(), lead.end(), std::uint64_t{0}));
}

int MultiPoly::degree_in(const std::string& var) const {
  if (is_zero()) return -1;
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return 0;
  std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  std::uint32_t d = 0;
  for (const auto& [exp, coeff] : terms_) d = std::max(d, exp[idx]);
  return static_cast<int>(d);
}

bool MultiPoly::is_homogeneous() const {
  if (is_zero()) return true;
  std::uint64_t d = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                    std::uint64_t{0});
  for (const auto& [exp, coeff] : terms_) {
    std::uint64_t e = std::accumulate(exp.begin(), exp.end(), std::uint64_t{0});
    if (e != d) return false;
  }
  return true;
}

bool MultiPoly::uses_variable(const std::string& var) const {
  return std::binary_search(vars_.begin(), vars_.end(), var);
}

const GaussianRational& MultiPoly::leading_coefficient() const {
  if (is_zero()) fail(ErrorKind::Internal, "leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

const ExpVec& MultiPoly::leading_exponents() const {
  if (is_zero()) fail(ErrorKind::Internal, "leading exponents of zero polynomial");
  return terms_.rbegin()->first;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  GaussianRational inv = leading_coefficient().inverse();
  return *this * inv;
}

MultiPoly MultiPoly::conj_coefficients() const {
  MultiPoly r;
  r.vars_ = vars_;
  for (const auto& [exp, coeff] : terms_) r.terms_.emplace(exp, coeff.conj());
  return r;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return MultiPoly();
  std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  MultiPoly r;
  r.vars_ = vars_;
  for (const auto& [exp, coeff] : terms_) {
    if (exp[idx] == 0) continue;
    ExpVec e = exp;
    GaussianRational c = coeff * GaussianRational(Rational(static_cast<long>(e[idx])));
    --e[idx];
    r.terms_.emplace(std::move(e), std::move(c));
  }
  r.canonicalize();
  return r;
}

GaussianRational MultiPoly::eval(const std::map<std::string, GaussianRational>& point) const {
  for (const auto& v : vars_)
    if (!point.count(v)) fail(ErrorKind::MissingVariable, "no value for variable '" + v + "'");
  GaussianRational total(0);
  // Power cache per variable.
  std::vector<std::vector<GaussianRational>> powers(vars_.size());
  for (std::size_t k = 0; k < vars_.size(); ++k) powers[k].push_back(GaussianRational(1));
  for (const auto& [exp, coeff] : terms_) {
    GaussianRational term = coeff;
    for (std::size_t k = 0; k < exp.size(); ++k) {
      auto& pk = powers[k];
      while (pk.size() <= exp[k]) pk.push_back(pk.back() * point.at(vars_[k]));
      term *= pk[exp[k]];
    }
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::specialize(const std::map<std::string, GaussianRational>& point) const {
  std::vector<int> spec_idx(vars_.size(), -1);
  bool any = false;
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    auto it = point.find(vars_[k]);
    if (it != point.end()) {
      spec_idx[k] = 1;
      any = true;
    }
  }
  if (!any) return *this;
  std::vector<std::vector<GaussianRational>> powers(vars_.size());
  for (std::size_t k = 0; k < vars_.size(); ++k) powers[k].push_back(GaussianRational(1));
  MultiPoly r;
  r.vars_ = vars_;
  for (const auto& [exp, coeff] : terms_) {
    GaussianRational c = coeff;
    ExpVec e = exp;
    for (std::size_t k = 0; k < exp.size(); ++k) {
      if (spec_idx[k] < 0 || exp[k] == 0) continue;
      auto& pk = powers[k];
      while (pk.size() <= exp[k]) pk.push_back(pk.back() * point.at(vars_[k]));
      c *= pk[exp[k]];
      e[k] = 0;
    }
    if (c.is_zero()) continue;
    auto [it, inserted] = r.terms_.emplace(std::move(e), c);
    if (!inserted) it->second += c;
  }
  r.canonicalize();
  return r;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& images) const {
  bool any = false;
  for (const auto& v : vars_)
    if (images.count(v)) any = true;
  if (!any) return *this;
  std::vector<std::vector<MultiPoly>> powers(vars_.size());
  MultiPoly total;
  for (const auto& [exp, coeff] : terms_) {
    MultiPoly term = MultiPoly::constant(coeff);
    for (std::size_t k = 0; k < exp.size(); ++k) {
      if (exp[k] == 0) continue;
      auto img = images.find(vars_[k]);
      MultiPoly base = (img != images.end()) ? img->second : MultiPoly::variable(vars_[k]);
      auto& pk = powers[k];
      if (pk.empty()) pk.push_back(MultiPoly::constant(GaussianRational(1)));
      while (pk.size() <= exp[k]) pk.push_back(pk.back() * base);
      term = term * pk[exp[k]];
    }
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::homogenize(const std::string& var, const std::string& new_var,
                                std::uint32_t degree) const {
  int dv = degree_in(var);
  if (dv > static_cast<int>(degree))
    fail(ErrorKind::DegreeTooSmall, "homogenization degree " + std::to_string(degree) +
                                        " below degree " + std::to_string(dv) + " in '" + var + "'");
  if (uses_variable(new_var))
    fail(ErrorKind::Internal, "homogenization variable '" + new_var + "' already present");
  if (is_zero()) return MultiPoly();
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  bool has_var = (it != vars_.end() && *it == var);
  std::size_t idx = has_var ? static_cast<std::size_t>(it - vars_.begin()) : 0;
  MultiPoly nv = MultiPoly::variable(new_var);
  MultiPoly total;
  for (const auto& [exp, coeff] : terms_) {
    std::uint32_t d = has_var ? exp[idx] : 0;
    MultiPoly term;
    term.vars_ = vars_;
    term.terms_.emplace(exp, coeff);
    total += term * pow(nv, degree - d);
  }
  return total;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(const std::string& var) const {
  if (is_zero()) return {};
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return {*this};
  std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  std::vector<MultiPoly> coeffs(static_cast<std::size_t>(degree_in(var)) + 1);
  std::vector<std::string> rest_vars = vars_;
  rest_vars.erase(rest_vars.begin() + static_cast<std::ptrdiff_t>(idx));
  for (auto& c : coeffs) c.vars_ = rest_vars;
  for (const auto& [exp, coeff] : terms_) {
    ExpVec e = exp;
    std::uint32_t d = e[idx];
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(idx));
    coeffs[d].terms_.emplace(std::move(e), coeff);
  }
  for (auto& c : coeffs) c.canonicalize();
  return coeffs;
}

MultiPoly MultiPoly::from_coefficients_in(const std::string& var,
                                          const std::vector<MultiPoly>& coeffs) {
  MultiPoly total;
  MultiPoly v = MultiPoly::variable(var);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    if (coeffs[k].uses_variable(var))
      fail(ErrorKind::Internal, "coefficient already uses '" + var + "'");
    total += coeffs[k] * pow(v, static_cast<std::uint32_t>(k));
  }
  return total;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  r.vars_ = vars_;
  for (const auto& [exp, coeff] : terms_) r.terms_.emplace(exp, -coeff);
  return r;
}

std::vector<std::string> merged_vars(const MultiPoly& a, const MultiPoly& b) {
  std::vector<std::string> merged;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                 std::back_inserter(merged));
  return merged;
}

MultiPoly::TermMap MultiPoly::remapped_terms(const std::vector<std::string>& target_vars) const {
  if (target_vars == vars_) return terms_;
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    auto it = std::lower_bound(target_vars.begin(), target_vars.end(), vars_[k]);
    pos[k] = static_cast<std::size_t>(it - target_vars.begin());
  }
  TermMap out;
  for (const auto& [exp, coeff] : terms_) {
    ExpVec e(target_vars.size(), 0);
    for (std::size_t k = 0; k < exp.size(); ++k) e[pos[k]] = exp[k];
    out.emplace(std::move(e), coeff);
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  std::vector<std::string> merged = merged_vars(*this, o);
  TermMap lhs = remapped_terms(merged);
  TermMap rhs = o.remapped_terms(merged);
  for (auto& [exp, coeff] : rhs) {
    auto [it, inserted] = lhs.emplace(exp, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) lhs.erase(it);
    }
  }
  vars_ = std::move(merged);
  terms_ = std::move(lhs);
  canonicalize();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  std::vector<std::string> merged = merged_vars(a, b);
  MultiPoly::TermMap lhs = a.remapped_terms(merged);
  MultiPoly::TermMap rhs = b.remapped_terms(merged);
  MultiPoly r;
  r.vars_ = merged;
  for (const auto& [ea, ca] : lhs) {
    for (const auto& [eb, cb] : rhs) {
      GaussianRational c = ca * cb;
      ExpVec e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      auto [it, inserted] = r.terms_.emplace(std::move(e), c);
      if (!inserted) it->second += c;
    }
  }
  r.canonicalize();
  return r;
}

MultiPoly operator*(const MultiPoly& a, const GaussianRational& c) {
  if (c.is_zero()) return MultiPoly();
  MultiPoly r;
  r.vars_ = a.vars_;
  for (const auto& [exp, coeff] : a.terms_) r.terms_.emplace(exp, coeff * c);
  return r;
}

MultiPoly pow(const MultiPoly& base, std::uint32_t n) {
  MultiPoly result = MultiPoly::constant(GaussianRational(1));
  MultiPoly b = base;
  std::uint32_t e = n;
  while (e > 0) {
    if (e & 1u) result = result * b;
    e >>= 1u;
    if (e > 0) b = b * b;
  }
  return result;
}

bool proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  // a*lc(b) == b*lc(a) avoids division and catches mismatched supports.
  return a * b.leading_coefficient() == b * a.leading_coefficient();
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending graded-lex reads naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exp, coeff] = *it;
    GaussianRational c = coeff;
    bool negative = (c.im == 0 && c.re < 0) || (c.re == 0 && c.im < 0);
    if (first) {
      if (negative) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      if (negative) {
        os << " - ";
        c = -c;
      } else {
        os << " + ";
      }
    }
    std::string mono;
    for (std::size_t k = 0; k < exp.size(); ++k) {
      if (exp[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[k];
      if (exp[k] > 1) mono += "^" + std::to_string(exp[k]);
    }
    std::string cs;
    if (c.im == 0) {
      cs = render_rational(c.re);
    } else if (c.re == 0) {
      cs = (c.im == 1) ? "i" : render_rational(c.im) + "*i";
    } else {
      Rational im_abs = c.im > 0 ? c.im : Rational(-c.im);
      cs = "(" + render_rational(c.re) + (c.im > 0 ? " + " : " - ") +
           ((im_abs == 1) ? "i" : render_rational(im_abs) + "*i") + ")";
    }
    if (mono.empty()) {
      os << cs;
    } else if (cs == "1") {
      os << mono;
    } else {
      os << cs << "*" << mono;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

}  // namespace twistor
