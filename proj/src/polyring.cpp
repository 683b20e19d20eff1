#include "qcr/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qcr {

VarSpace VarSpace::holomorphic(int n, int d) {
  if (n < 1 || d < 1) throw UsageError("VarSpace requires n >= 1 and d >= 1");
  return {n, d, Flavor::holomorphic};
}

VarSpace VarSpace::real_restricted(int n, int d) {
  if (n < 1 || d < 1) throw UsageError("VarSpace requires n >= 1 and d >= 1");
  return {n, d, Flavor::real_restricted};
}

int VarSpace::zbar(int j) const {
  if (flavor != Flavor::real_restricted) throw UsageError("zbar variables exist only in the real-restricted ring");
  return n + j;
}

std::string VarSpace::var_name(int var) const {
  if (var < 0 || var >= num_vars()) throw UsageError("variable index " + std::to_string(var) + " out of range");
  if (is_z(var)) return "z" + std::to_string(var + 1);
  if (is_zbar(var)) return "zb" + std::to_string(var - n + 1);
  const int k = var - (flavor == Flavor::holomorphic ? n : 2 * n);
  return (flavor == Flavor::holomorphic ? "w" : "u") + std::to_string(k + 1);
}

int ordinary_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

int weighted_degree(const VarSpace& space, const Exponents& e) {
  int deg = 0;
  for (size_t v = 0; v < e.size(); ++v) deg += e[v] * space.weight(static_cast<int>(v));
  return deg;
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const int da = ordinary_degree(a);
  const int db = ordinary_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(VarSpace space, TermMap terms) : space_(space), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (static_cast<int>(it->first.size()) != space_.num_vars()) throw UsageError("monomial length does not match ring");
    if (std::any_of(it->first.begin(), it->first.end(), [](int x) { return x < 0; }))
      throw UsageError("negative exponent");
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
}

Polynomial Polynomial::constant(VarSpace space, const GaussianRational& c) {
  Polynomial p(space);
  p.add_term(Exponents(space.num_vars(), 0), c);
  return p;
}

Polynomial Polynomial::variable(VarSpace space, int var) {
  if (var < 0 || var >= space.num_vars()) throw UsageError("unknown variable " + std::to_string(var));
  Exponents e(space.num_vars(), 0);
  e[var] = 1;
  return monomial(space, std::move(e));
}

Polynomial Polynomial::monomial(VarSpace space, Exponents e, const GaussianRational& c) {
  if (static_cast<int>(e.size()) != space.num_vars()) throw UsageError("monomial length does not match ring");
  Polynomial p(space);
  p.add_term(e, c);
  return p;
}

GaussianRational Polynomial::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void Polynomial::add_term(const Exponents& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Polynomial::check_space(const Polynomial& o) const {
  if (!(space_ == o.space_)) throw UsageError("polynomials live in different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_space(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_space(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_space(b);
  Polynomial out(a.space_);
  Exponents e(a.space_.num_vars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw UsageError("negative power");
  Polynomial result = constant(space_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coef = serialize_gaussian(c);
    bool negative = false;
    if (c.is_real() && sgn(c.re()) < 0) {
      negative = true;
      coef = serialize_gaussian(-c);
    } else if (sgn(c.re()) == 0 && sgn(c.im()) < 0) {
      negative = true;
      coef = serialize_gaussian(-c);
    }
    if (!c.is_real() && sgn(c.re()) != 0) coef = "(" + coef + ")";
    if (first) {
      os << (negative ? "-" : "");
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::string mono;
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += space_.var_name(static_cast<int>(v));
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      os << coef;
    } else if (coef == "1") {
      os << mono;
    } else {
      os << coef << "*" << mono;
    }
  }
  return os.str();
}

Polynomial ring_arith(const Polynomial& p, const Polynomial& q, RingOp op) {
  switch (op) {
    case RingOp::add: return p + q;
    case RingOp::sub: return p - q;
    case RingOp::mul: return p * q;
  }
  throw UsageError("unknown ring operation");
}

Polynomial conjugate(const Polynomial& p) {
  const VarSpace& s = p.space();
  if (s.flavor != Flavor::real_restricted)
    throw UsageError("conjugation is only defined on the real-restricted ring");
  Polynomial out(s);
  for (const auto& [e, c] : p.terms()) {
    Exponents swapped = e;
    for (int j = 0; j < s.n; ++j) std::swap(swapped[s.z(j)], swapped[s.zbar(j)]);
    out.add_term(swapped, conj(c));
  }
  return out;
}

Polynomial partial_derivative(const Polynomial& p, int var) {
  if (var < 0 || var >= p.space().num_vars()) throw UsageError("unknown variable " + std::to_string(var));
  Polynomial out(p.space());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponents de = e;
    de[var] -= 1;
    out.add_term(de, c * GaussianRational(e[var]));
  }
  return out;
}

WSubstitution::WSubstitution(std::vector<Polynomial> forms) : forms_(std::move(forms)) {
  if (forms_.empty()) throw UsageError("substitution needs at least one form");
  target_ = forms_.front().space();
  if (target_.flavor != Flavor::real_restricted) throw UsageError("forms must live in the real-restricted ring");
  n_ = target_.n;
  d_ = target_.d;
  if (static_cast<int>(forms_.size()) != d_) throw UsageError("number of forms does not match codimension");
  for (const auto& f : forms_)
    if (!(f.space() == target_)) throw UsageError("forms live in different rings");
  powers_.resize(d_);
  for (int k = 0; k < d_; ++k) {
    powers_[k].push_back(Polynomial::constant(target_, 1));
  }
}

const Polynomial& WSubstitution::power(int k, int e) const {
  auto& pw = powers_[k];
  if (pw.size() < 2) {
    pw.push_back(Polynomial::variable(target_, target_.u(k)) + GaussianRational::i() * forms_[k]);
  }
  while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * pw[1]);
  return pw[e];
}

const Polynomial& WSubstitution::image(const Exponents& e) const {
  auto it = cache_.find(e);
  if (it != cache_.end()) return it->second;
  Exponents z_part(target_.num_vars(), 0);
  for (int j = 0; j < n_; ++j) z_part[target_.z(j)] = e[j];
  Polynomial img = Polynomial::monomial(target_, z_part);
  for (int k = 0; k < d_; ++k) {
    if (e[n_ + k] > 0) img = img * power(k, e[n_ + k]);
  }
  return cache_.emplace(e, std::move(img)).first->second;
}

Polynomial WSubstitution::operator()(const Polynomial& p) const {
  const VarSpace& s = p.space();
  if (s.flavor != Flavor::holomorphic) throw UsageError("substitute_w expects a holomorphic polynomial");
  if (s.n != n_ || s.d != d_) throw UsageError("dimension mismatch between polynomial and model");
  Polynomial out(target_);
  for (const auto& [e, c] : p.terms()) {
    const Polynomial& img = image(e);
    for (const auto& [ie, ic] : img.terms()) out.add_term(ie, ic * c);
  }
  return out;
}

Polynomial substitute_w(const Polynomial& p, std::span<const Polynomial> forms) {
  return WSubstitution(std::vector<Polynomial>(forms.begin(), forms.end()))(p);
}

std::pair<Polynomial, Polynomial> real_imag_parts(const Polynomial& p) {
  const Polynomial c = conjugate(p);
  Polynomial re = (p + c) * GaussianRational(Rational(1, 2));
  Polynomial im = (p - c) * GaussianRational(Rational(0), Rational(-1, 2));  // 1/(2i) = -i/2
  return {std::move(re), std::move(im)};
}

std::map<int, Polynomial> homogeneous_parts(const Polynomial& p, Grading grading) {
  std::map<int, Polynomial> parts;
  for (const auto& [e, c] : p.terms()) {
    const int deg = grading == Grading::ordinary ? ordinary_degree(e) : weighted_degree(p.space(), e);
    auto [it, _] = parts.try_emplace(deg, p.space());
    it->second.add_term(e, c);
  }
  return parts;
}

std::optional<int> vanishing_order(const Polynomial& p) {
  if (p.is_zero()) return std::nullopt;
  // Terms are sorted by ordinary degree first.
  return ordinary_degree(p.terms().begin()->first);
}

}  // namespace qcr
