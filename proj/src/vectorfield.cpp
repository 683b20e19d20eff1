#include "qcr/vectorfield.hpp"

#include <algorithm>
#include <sstream>

namespace qcr {

HoloVectorField::HoloVectorField(VarSpace space)
    : space_(space),
      f_(static_cast<std::size_t>(space.n), Polynomial(space)),
      g_(static_cast<std::size_t>(space.d), Polynomial(space)) {
  if (space.flavor != Flavor::holomorphic) throw UsageError("vector fields have holomorphic coefficients");
}

HoloVectorField::HoloVectorField(VarSpace space, std::vector<Polynomial> f, std::vector<Polynomial> g)
    : space_(space), f_(std::move(f)), g_(std::move(g)) {
  if (space.flavor != Flavor::holomorphic) throw UsageError("vector fields have holomorphic coefficients");
  if (static_cast<int>(f_.size()) != space.n || static_cast<int>(g_.size()) != space.d)
    throw UsageError("field needs n z-coefficients and d w-coefficients");
  for (const auto& p : f_)
    if (!(p.space() == space_)) throw UsageError("coefficient lives in a different ring");
  for (const auto& p : g_)
    if (!(p.space() == space_)) throw UsageError("coefficient lives in a different ring");
}

bool HoloVectorField::is_zero() const {
  auto zero = [](const Polynomial& p) { return p.is_zero(); };
  return std::all_of(f_.begin(), f_.end(), zero) && std::all_of(g_.begin(), g_.end(), zero);
}

void HoloVectorField::check_space(const HoloVectorField& o) const {
  if (!(space_ == o.space_)) throw UsageError("vector fields live over different spaces");
}

HoloVectorField& HoloVectorField::operator+=(const HoloVectorField& o) {
  check_space(o);
  for (std::size_t j = 0; j < f_.size(); ++j) f_[j] += o.f_[j];
  for (std::size_t k = 0; k < g_.size(); ++k) g_[k] += o.g_[k];
  return *this;
}

HoloVectorField& HoloVectorField::operator-=(const HoloVectorField& o) {
  check_space(o);
  for (std::size_t j = 0; j < f_.size(); ++j) f_[j] -= o.f_[j];
  for (std::size_t k = 0; k < g_.size(); ++k) g_[k] -= o.g_[k];
  return *this;
}

HoloVectorField& HoloVectorField::operator*=(const GaussianRational& c) {
  for (auto& p : f_) p *= c;
  for (auto& p : g_) p *= c;
  return *this;
}

HoloVectorField& HoloVectorField::operator*=(const Polynomial& h) {
  for (auto& p : f_) p = p * h;
  for (auto& p : g_) p = p * h;
  return *this;
}

std::string HoloVectorField::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Polynomial& p, const std::string& var) {
    if (p.is_zero()) return;
    if (!first) os << " + ";
    first = false;
    os << "(" << p.to_string() << ") d/d" << var;
  };
  for (int j = 0; j < n(); ++j) emit(f(j), "z" + std::to_string(j + 1));
  for (int k = 0; k < d(); ++k) emit(g(k), "w" + std::to_string(k + 1));
  return first ? "0" : os.str();
}

std::map<std::string, HoloVectorField> paper_fields() {
  const VarSpace s = VarSpace::holomorphic(4, 5);
  const GaussianRational i = GaussianRational::i();
  auto z = [&](int j) { return Polynomial::variable(s, s.z(j - 1)); };
  auto w = [&](int k) { return Polynomial::variable(s, s.w(k - 1)); };

  // X = i(z1 d/dz3 + z2 d/dz4)
  HoloVectorField x(s);
  x.f(2) = i * z(1);
  x.f(3) = i * z(2);
  // Y = i(-i z1 d/dz3 + i z2 d/dz4)
  HoloVectorField y(s);
  y.f(2) = i * (-i) * z(1);
  y.f(3) = i * i * z(2);
  // Z = i z1 d/dz4
  HoloVectorField zf(s);
  zf.f(3) = i * z(1);
  // U = i z2 d/dz3
  HoloVectorField u(s);
  u.f(2) = i * z(2);

  const HoloVectorField y0 = GaussianRational(-1) * y;
  const HoloVectorField y1 = GaussianRational(2) * y;
  const HoloVectorField z1 = GaussianRational(-2) * zf;
  const HoloVectorField u1 = GaussianRational(-2) * u;

  const GaussianRational half(Rational(1, 2));
  HoloVectorField t = (half * w(1).pow(2)) * y0;
  t += (half * w(2).pow(2)) * y;
  t += (w(1) * w(2)) * x;
  t += (w(2) * w(5)) * z1;
  t += (w(2) * w(4)) * u1;
  t += (w(4) * w(5)) * y1;

  HoloVectorField e(s);
  for (int j = 1; j <= 4; ++j) e.f(j - 1) = z(j);
  for (int k = 1; k <= 5; ++k) e.g(k - 1) = GaussianRational(2) * w(k);

  return {{"X", x},   {"Y", y},   {"Z", zf},  {"U", u},  {"Y0", y0},
          {"Y1", y1}, {"Z1", z1}, {"U1", u1}, {"T", t},  {"E", e}};
}

TangencyEvaluator::TangencyEvaluator(const QuadricModel& model)
    : n_(model.n()), d_(model.d()), subst_(model.form_polynomials()) {
  const VarSpace& rs = subst_.target();
  dp_.resize(static_cast<std::size_t>(d_));
  for (int k = 0; k < d_; ++k) {
    for (int j = 0; j < n_; ++j)
      dp_[static_cast<std::size_t>(k)].push_back(
          partial_derivative(model.form_polynomials()[static_cast<std::size_t>(k)], rs.z(j)));
  }
}

void TangencyEvaluator::check(const HoloVectorField& v) const {
  if (v.n() != n_ || v.d() != d_)
    throw UsageError("field dimensions (n=" + std::to_string(v.n()) + ", d=" + std::to_string(v.d()) +
                     ") do not match model (n=" + std::to_string(n_) + ", d=" + std::to_string(d_) + ")");
}

std::vector<Polynomial> TangencyEvaluator::apply_to_forms(const HoloVectorField& v) const {
  check(v);
  std::vector<Polynomial> out(static_cast<std::size_t>(d_), Polynomial(real_space()));
  for (int j = 0; j < n_; ++j) {
    if (v.f(j).is_zero()) continue;
    const Polynomial fj = subst_(v.f(j));
    for (int k = 0; k < d_; ++k) out[static_cast<std::size_t>(k)] += fj * dp_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
  }
  return out;
}

std::vector<Polynomial> TangencyEvaluator::residual(const HoloVectorField& v) const {
  check(v);
  std::vector<Polynomial> out(static_cast<std::size_t>(d_), Polynomial(real_space()));
  for (int j = 0; j < n_; ++j)
    for (const auto& [e, c] : v.f(j).terms()) add_monomial_residual(false, j, e, c, out);
  for (int k = 0; k < d_; ++k)
    for (const auto& [e, c] : v.g(k).terms()) add_monomial_residual(true, k, e, c, out);
  return out;
}

void TangencyEvaluator::add_monomial_residual(bool is_g, int index, const Exponents& e, const GaussianRational& c,
                                              std::vector<Polynomial>& out) const {
  const Polynomial img = subst_.image(e) * c;
  if (is_g) {
    // Im q = (q - conj q) / (2i)
    out[static_cast<std::size_t>(index)] += real_imag_parts(img).second;
    return;
  }
  for (int k = 0; k < d_; ++k) {
    const Polynomial& dp = dp_[static_cast<std::size_t>(k)][static_cast<std::size_t>(index)];
    if (dp.is_zero()) continue;
    const Polynomial q = img * dp;
    // -2 Re q = -(q + conj q)
    out[static_cast<std::size_t>(k)] -= q + conjugate(q);
  }
}

std::pair<std::vector<Polynomial>, std::vector<Polynomial>> TangencyEvaluator::unit_residuals(
    bool is_g, int index, const Exponents& e) const {
  std::vector<Polynomial> real_unit(static_cast<std::size_t>(d_), Polynomial(real_space()));
  std::vector<Polynomial> imag_unit = real_unit;
  const Polynomial& img = subst_.image(e);
  if (is_g) {
    // Im(q) and Im(iq) = Re(q)
    auto [re, im] = real_imag_parts(img);
    real_unit[static_cast<std::size_t>(index)] = std::move(im);
    imag_unit[static_cast<std::size_t>(index)] = std::move(re);
    return {std::move(real_unit), std::move(imag_unit)};
  }
  for (int k = 0; k < d_; ++k) {
    const Polynomial& dp = dp_[static_cast<std::size_t>(k)][static_cast<std::size_t>(index)];
    if (dp.is_zero()) continue;
    // -2 Re(q) and -2 Re(iq) = 2 Im(q)
    auto [re, im] = real_imag_parts(img * dp);
    real_unit[static_cast<std::size_t>(k)] = re * GaussianRational(-2);
    imag_unit[static_cast<std::size_t>(k)] = im * GaussianRational(2);
  }
  return {std::move(real_unit), std::move(imag_unit)};
}

std::vector<Polynomial> apply_to_forms(const HoloVectorField& v, const QuadricModel& model) {
  return TangencyEvaluator(model).apply_to_forms(v);
}

std::vector<Polynomial> tangency_residual(const HoloVectorField& v, const QuadricModel& model) {
  return TangencyEvaluator(model).residual(v);
}

bool is_infinitesimal_automorphism(const HoloVectorField& v, const QuadricModel& model) {
  const auto r = tangency_residual(v, model);
  return std::all_of(r.begin(), r.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::optional<int> field_vanishing_order(const HoloVectorField& v) {
  std::optional<int> best;
  auto visit = [&](const Polynomial& p) {
    const auto o = vanishing_order(p);
    if (o && (!best || *o < *best)) best = o;
  };
  for (const auto& p : v.f()) visit(p);
  for (const auto& p : v.g()) visit(p);
  return best;
}

std::map<int, HoloVectorField> weighted_decomposition(const HoloVectorField& v) {
  std::map<int, HoloVectorField> pieces;
  const VarSpace& s = v.space();
  auto piece = [&](int mu) -> HoloVectorField& { return pieces.try_emplace(mu, s).first->second; };
  for (int j = 0; j < v.n(); ++j)
    for (const auto& [e, c] : v.f(j).terms()) piece(weighted_degree(s, e) - 1).f(j).add_term(e, c);
  for (int k = 0; k < v.d(); ++k)
    for (const auto& [e, c] : v.g(k).terms()) piece(weighted_degree(s, e) - 2).g(k).add_term(e, c);
  return pieces;
}

}  // namespace qcr
