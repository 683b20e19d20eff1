// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <functional>
#include <iostream>

#include "generators.hpp"
#include "qcr/report.hpp"

using namespace qcr;
using qcr::testing::all_zero;
using qcr::testing::Gen;

namespace {

const GaussianRational I = GaussianRational::i();
constexpr int kCases = 1000;

struct Criterion {
  std::string name;
  std::function<std::string()> body;  // empty string on success, else the reason
};

std::string expect(bool ok, const std::string& why) { return ok ? "" : why; }

// Laplace expansion along the first row; no elimination involved.
GaussianRational cofactor_det(const HermitianForm& m) {
  const Eigen::Index n = m.rows();
  if (n == 1) return m(0, 0);
  GaussianRational det;
  for (Eigen::Index c = 0; c < n; ++c) {
    HermitianForm minor(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i)
      for (Eigen::Index j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    const GaussianRational term = m(0, c) * cofactor_det(minor);
    det = c % 2 == 0 ? det + term : det - term;
  }
  return det;
}

std::string independence() {
  const auto r = forms_linearly_independent(paper_model());
  return expect(r.independent && r.rank == 5, "rank " + std::to_string(r.rank));
}

std::string tumanov() {
  const auto m = paper_model();
  const auto c = tumanov_witness(m);
  if (!c) return "no witness";
  if (exact_determinant(combination(m, *c)).is_zero()) return "determinant vanishes at the witness";
  return expect(cofactor_det(m.form(2) + m.form(3) + m.form(4)) == GaussianRational(1), "det(A3+A4+A5) != 1");
}

std::string levi_and_type() {
  const auto m = paper_model();
  return expect(levi_nondegenerate(m) && finite_type_two(m), "structural check refuted");
}

std::string syzygy() {
  const auto m = paper_model();
  const auto syz = quadratic_syzygies(m);
  if (syz.size() != 1) return std::to_string(syz.size()) + " relations";
  const auto pairs = quadratic_pairs(5);
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    Rational expected = 0;
    if (pairs[c] == std::pair{0, 0} || pairs[c] == std::pair{1, 1}) expected = 1;
    if (pairs[c] == std::pair{3, 4}) expected = -4;
    if (syz[0].coefficients[c] != expected) return "unexpected coefficient at pair " + std::to_string(c);
  }
  // Re-expand by hand from the form polynomials.
  const auto& p = m.form_polynomials();
  return expect((p[0] * p[0] + p[1] * p[1] - GaussianRational(4) * p[3] * p[4]).is_zero() &&
                    expand_relation(m, syz[0]).is_zero(),
                "relation does not vanish");
}

std::string actions() {
  const auto m = paper_model();
  const auto fs = paper_fields();
  const std::vector<std::pair<std::string, int>> cases{{"X", 1}, {"Y", 2}, {"Z", 4}, {"U", 5}};
  for (const auto& [name, k] : cases) {
    const auto out = apply_to_forms(fs.at(name), m);
    for (std::size_t c = 0; c < out.size(); ++c) {
      const Polynomial expected = c == 2 ? I * form_polynomial(m, k) : Polynomial(m.real_space());
      if (out[c] != expected) return name + "(P) component " + std::to_string(c + 1);
    }
  }
  return "";
}

std::string identities() {
  const auto ids = action_identities(paper_model());
  for (std::size_t a = 0; a < ids.size(); ++a)
    if (!all_zero(ids[a])) return "identity " + std::to_string(a + 1) + " nonzero";
  return "";
}

std::string headline() {
  const auto m = paper_model();
  const auto t = paper_fields().at("T");
  if (!all_zero(tangency_residual(t, m))) return "T not tangent";
  if (field_vanishing_order(t) != 3) return "T does not vanish to order 3";
  const auto w = jet_counterexample(m, 2, 4);
  return expect(w && !w->is_zero() && is_infinitesimal_automorphism(*w, m) && *field_vanishing_order(*w) >= 3,
                "no jet counterexample");
}

std::string graded() {
  const auto m = paper_model();
  const auto fs = paper_fields();
  const auto c2 = graded_component(m, -2);
  if (c2.real_dimension != 5) return "dim at -2 is " + std::to_string(c2.real_dimension);
  for (int k = 0; k < 5; ++k) {
    HoloVectorField v(m.holomorphic_space());
    v.g(k) = Polynomial::constant(m.holomorphic_space(), 1);
    if (!c2.contains(v)) return "real w-translation missing";
  }
  const auto c1 = graded_component(m, -1);
  if (c1.real_dimension != 8) return "dim at -1 is " + std::to_string(c1.real_dimension);
  // Hand parametrization: f = a, g_k = sum_l 2i conj(sum_j a_j (A_k)_jl) z_l.
  const VarSpace s = m.holomorphic_space();
  for (int j = 0; j < 4; ++j) {
    for (const auto& unit : {GaussianRational(1), I}) {
      HoloVectorField v(s);
      v.f(j) = Polynomial::constant(s, unit);
      for (int k = 0; k < 5; ++k)
        for (int l = 0; l < 4; ++l)
          v.g(k) += Polynomial::variable(s, s.z(l)) * (GaussianRational(0, 2) * conj(unit * m.form(k)(j, l)));
      if (!c1.contains(v)) return "hand-parametrized field not in weight -1 span";
    }
  }
  const auto c0 = graded_component(m, 0);
  for (const char* name : {"X", "Y", "Z", "U", "E"})
    if (!c0.contains(fs.at(name))) return std::string(name) + " not in weight 0 span";
  return expect(graded_component(m, 4).contains(fs.at("T")), "T not in weight 4 span");
}

std::string properties() {
  Gen gen(2024);
  const VarSpace r = VarSpace::real_restricted(2, 1);
  for (int t = 0; t < kCases; ++t) {
    const auto a = gen.polynomial(r);
    const auto b = gen.polynomial(r);
    const auto c = gen.polynomial(r);
    if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c || a * b != b * a)
      return "ring axioms";
    if (conjugate(conjugate(a)) != a || conjugate(a * b) != conjugate(a) * conjugate(b)) return "conjugation laws";
  }
  const VarSpace h = VarSpace::holomorphic(2, 2);
  const VarSpace rr = VarSpace::real_restricted(2, 2);
  for (int t = 0; t < kCases; ++t) {
    std::vector<Polynomial> forms;
    for (int k = 0; k < 2; ++k) {
      const Polynomial q = gen.polynomial(rr, 3, 1);
      forms.push_back(q + conjugate(q));
    }
    const WSubstitution sub(forms);
    const auto p = gen.polynomial(h, 3, 2);
    const auto q = gen.polynomial(h, 3, 2);
    if (sub(p * q) != sub(p) * sub(q) || sub(p + q) != sub(p) + sub(q)) return "substitution homomorphism";
  }
  for (int t = 0; t < kCases; ++t) {
    const auto m = gen.model(2, 2);
    const auto v = gen.field(m.holomorphic_space(), 2);
    const auto w = gen.field(m.holomorphic_space(), 2);
    const GaussianRational x(gen.rational());
    const TangencyEvaluator eval(m);
    const auto lhs = eval.residual(v + x * w);
    const auto rv = eval.residual(v);
    const auto rw = eval.residual(w);
    for (std::size_t k = 0; k < lhs.size(); ++k)
      if (lhs[k] != rv[k] + x * rw[k]) return "residual linearity";
  }
  for (int t = 0; t < kCases; ++t) {
    const auto m = gen.model(2, 2);
    const TangencyEvaluator eval(m);
    for (int mu : {-2, -1, 0}) {
      const auto c = graded_component(m, mu);
      if (c.real_dimension != graded_component(m, mu, LayoutOrder::reversed).real_dimension)
        return "layout dependence at weight " + std::to_string(mu);
      for (const auto& v : c.basis)
        if (!all_zero(eval.residual(v))) return "kernel round trip";
    }
  }
  for (int mu = -2; mu <= 4; ++mu)
    for (const auto& v : graded_component(paper_model(), mu).basis)
      if (!is_infinitesimal_automorphism(v, paper_model())) return "built-in model round trip";
  return "";
}

std::string negative_controls() {
  const auto m = paper_model();
  HoloVectorField v(m.holomorphic_space());
  v.f(0) = I * Polynomial::variable(m.holomorphic_space(), 0);
  if (is_infinitesimal_automorphism(v, m)) return "i z1 d/dz1 accepted";
  if (forms_linearly_independent(QuadricModel(4, {m.form(0), m.form(0)})).independent) return "duplicate forms accepted";
  std::vector<HermitianForm> low;
  for (int k = 0; k < 5; ++k) {
    HermitianForm f = HermitianForm::Zero(4, 4);
    f.topLeftCorner(2, 2) = m.form(k).topLeftCorner(2, 2);
    low.push_back(f);
  }
  return expect(!tumanov_witness(QuadricModel(4, low)).has_value(), "two-variable model has a Tumanov witness");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1 forms linearly independent, rank 5", independence},
      {"2 Tumanov witness, det(A3+A4+A5) = 1", tumanov},
      {"3 Levi non-degenerate and finite type 2", levi_and_type},
      {"4 unique quadratic relation P1^2 + P2^2 - 4 P4 P5", syzygy},
      {"5 X, Y, Z, U act on the forms", actions},
      {"6 four quadratic identities vanish", identities},
      {"7 T tangent, order 3, 2-jet counterexample", headline},
      {"8 graded dimensions 5, 8 and spans at weights 0, 4", graded},
      {"9 property suites (1000 cases each)", properties},
      {"10 negative controls", negative_controls},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string why;
    try {
      why = c.body();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    std::cout << (why.empty() ? "PASS " : "FAIL ") << c.name << (why.empty() ? "" : " (" + why + ")") << "\n";
    failures += !why.empty();
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria pass\n";
  return failures == 0 ? 0 : 1;
}
