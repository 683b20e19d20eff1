#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "qcr/polyring.hpp"

using namespace qcr;
using qcr::testing::Gen;

namespace {

// Real-restricted ring with n = 2, d = 1: variables z1 z2 zb1 zb2 u1.
const VarSpace R = VarSpace::real_restricted(2, 1);
// Holomorphic ring with n = 2, d = 1: variables z1 z2 w1.
const VarSpace H = VarSpace::holomorphic(2, 1);

Polynomial mono(const VarSpace& s, Exponents e, GaussianRational c = 1) { return Polynomial::monomial(s, std::move(e), c); }
Polynomial z(int j) { return Polynomial::variable(R, R.z(j - 1)); }
Polynomial zb(int j) { return Polynomial::variable(R, R.zbar(j - 1)); }
Polynomial u1() { return Polynomial::variable(R, R.u(0)); }

// P = z1 zb2 + z2 zb1, written out term by term.
Polynomial p1() { return mono(R, {1, 0, 0, 1, 0}) + mono(R, {0, 1, 1, 0, 0}); }

const GaussianRational I = GaussianRational::i();

}  // namespace

TEST_CASE("ring_arith examples") {
  CHECK(ring_arith(z(1) + zb(1), z(1) - zb(1), RingOp::mul) == mono(R, {2, 0, 0, 0, 0}) - mono(R, {0, 0, 2, 0, 0}));
  const Polynomial p = z(1) * I + u1() * GaussianRational(3);
  CHECK(ring_arith(p, -p, RingOp::add).is_zero());
  CHECK(ring_arith(p, p, RingOp::sub).terms().empty());

  // (z1 zb2 + z2 zb1)^2 expanded by hand.
  const Polynomial expected =
      mono(R, {2, 0, 0, 2, 0}) + mono(R, {1, 1, 1, 1, 0}, GaussianRational(2)) + mono(R, {0, 2, 2, 0, 0});
  CHECK(ring_arith(p1(), p1(), RingOp::mul) == expected);
  CHECK(p1().pow(2) == expected);
}

TEST_CASE("mismatched rings are a usage error") {
  const Polynomial h = Polynomial::variable(H, H.z(0));
  CHECK_THROWS_AS(z(1) + h, UsageError);
  CHECK_THROWS_AS(z(1) * h, UsageError);
  CHECK_THROWS_AS(Polynomial::monomial(R, {1, 0}), UsageError);
}

TEST_CASE("conjugate examples") {
  CHECK(conjugate(I * z(1) * zb(2)) == (-I) * z(2) * zb(1));
  CHECK(conjugate(p1()) == p1());
  CHECK(conjugate(u1() * z(1)) == u1() * zb(1));
  CHECK_THROWS_AS(conjugate(Polynomial::variable(H, 0)), UsageError);
}

TEST_CASE("partial_derivative examples") {
  CHECK(partial_derivative(p1(), R.z(1)) == zb(1));
  CHECK(partial_derivative(z(1).pow(2), R.z(0)) == GaussianRational(2) * z(1));
  CHECK(partial_derivative(zb(1), R.z(0)).is_zero());
  CHECK_THROWS_AS(partial_derivative(p1(), 5), UsageError);
  CHECK_THROWS_AS(partial_derivative(p1(), -1), UsageError);
}

TEST_CASE("substitute_w examples") {
  const std::vector<Polynomial> forms{p1()};
  const Polynomial w1 = Polynomial::variable(H, H.w(0));
  CHECK(substitute_w(w1, forms) == u1() + I * p1());
  CHECK(substitute_w(Polynomial::variable(H, H.z(0)), forms) == z(1));
  const auto [re, im] = real_imag_parts(substitute_w(w1.pow(2), forms));
  CHECK(im == GaussianRational(2) * u1() * p1());
  CHECK(re == u1().pow(2) - p1().pow(2));

  CHECK_THROWS_AS(substitute_w(p1(), forms), UsageError);
  const Polynomial wrong_dims = Polynomial::variable(VarSpace::holomorphic(3, 1), 0);
  CHECK_THROWS_AS(substitute_w(wrong_dims, forms), UsageError);
}

TEST_CASE("real_imag_parts examples") {
  {
    const auto [re, im] = real_imag_parts(I * p1());
    CHECK(re.is_zero());
    CHECK(im == p1());
  }
  {
    const auto [re, im] = real_imag_parts(u1());
    CHECK(re == u1());
    CHECK(im.is_zero());
  }
  {
    const auto [re, im] = real_imag_parts(z(1));
    CHECK(re == (z(1) + zb(1)) * GaussianRational(Rational(1, 2)));
    CHECK(im == (z(1) - zb(1)) * (GaussianRational(1) / GaussianRational(0, 2)));
  }
}

TEST_CASE("grading examples") {
  const VarSpace h45 = VarSpace::holomorphic(4, 5);
  Exponents e(9, 0);
  e[h45.w(0)] = 2;
  e[h45.z(0)] = 1;
  CHECK(ordinary_degree(e) == 3);
  CHECK(weighted_degree(h45, e) == 5);
  const Polynomial w1sq_z1 = Polynomial::monomial(h45, e);
  CHECK(homogeneous_parts(w1sq_z1, Grading::weighted).begin()->first == 5);
  CHECK(vanishing_order(w1sq_z1) == 3);

  const Polynomial z1zb2 = z(1) * zb(2);
  CHECK(homogeneous_parts(z1zb2, Grading::ordinary).begin()->first == 2);
  CHECK(homogeneous_parts(z1zb2, Grading::weighted).begin()->first == 2);
  CHECK(!vanishing_order(Polynomial(R)).has_value());

  const Polynomial mixed = u1() + z(1) * zb(1) * z(2) + Polynomial::constant(R, 3);
  const auto ord = homogeneous_parts(mixed, Grading::ordinary);
  CHECK(ord.size() == 3);
  const auto wt = homogeneous_parts(mixed, Grading::weighted);
  REQUIRE(wt.size() == 3);
  CHECK(wt.at(2) == u1());
  CHECK(vanishing_order(mixed) == 0);
}

TEST_CASE("canonical term order is graded lexicographic") {
  const Polynomial p = zb(2) + u1() * z(1) + z(1) + Polynomial::constant(R, 7) + z(2) * z(2);
  std::vector<Exponents> order;
  for (const auto& [e, c] : p.terms()) order.push_back(e);
  const std::vector<Exponents> expected{
      {0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {1, 0, 0, 0, 1}, {0, 2, 0, 0, 0}};
  CHECK(order == expected);
  CHECK(p.to_string() == "7 + z1 + zb2 + z1*u1 + z2^2");
}

TEST_CASE("ring axioms on random sparse polynomials") {
  Gen gen(101);
  for (int t = 0; t < 1000; ++t) {
    const auto a = gen.polynomial(R);
    const auto b = gen.polynomial(R);
    const auto c = gen.polynomial(R);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("conjugation laws on random polynomials") {
  Gen gen(103);
  for (int t = 0; t < 1000; ++t) {
    const auto a = gen.polynomial(R);
    const auto b = gen.polynomial(R);
    CHECK(conjugate(conjugate(a)) == a);
    CHECK(conjugate(a * b) == conjugate(a) * conjugate(b));
    CHECK(conjugate(a + b) == conjugate(a) + conjugate(b));
  }
}

TEST_CASE("substitute_w is a ring homomorphism") {
  Gen gen(107);
  const VarSpace h = VarSpace::holomorphic(2, 2);
  const VarSpace r = VarSpace::real_restricted(2, 2);
  for (int t = 0; t < 1000; ++t) {
    // Random conjugation-fixed forms.
    std::vector<Polynomial> forms;
    for (int k = 0; k < 2; ++k) {
      Polynomial q = gen.polynomial(r, 3, 1);
      forms.push_back(q + conjugate(q));
    }
    const WSubstitution s(forms);
    const auto p = gen.polynomial(h, 3, 2);
    const auto q = gen.polynomial(h, 3, 2);
    CHECK(s(p * q) == s(p) * s(q));
    CHECK(s(p + q) == s(p) + s(q));
  }
}

TEST_CASE("real_imag_parts reconstructs and yields real parts") {
  Gen gen(109);
  for (int t = 0; t < 1000; ++t) {
    const auto p = gen.polynomial(R);
    const auto [re, im] = real_imag_parts(p);
    CHECK(re + I * im == p);
    CHECK(conjugate(re) == re);
    CHECK(conjugate(im) == im);
  }
}

TEST_CASE("weighted degree is additive on products") {
  Gen gen(113);
  for (int t = 0; t < 1000; ++t) {
    const auto pa = homogeneous_parts(gen.polynomial(R, 4, 2), Grading::weighted);
    const auto pb = homogeneous_parts(gen.polynomial(R, 4, 2), Grading::weighted);
    if (pa.empty() || pb.empty()) continue;
    const auto& [da, a] = *pa.begin();
    const auto& [db, b] = *pb.begin();
    const auto prod = homogeneous_parts(a * b, Grading::weighted);
    REQUIRE(prod.size() == 1);
    CHECK(prod.begin()->first == da + db);
  }
}

TEST_CASE("Leibniz rule") {
  Gen gen(127);
  for (int t = 0; t < 1000; ++t) {
    const auto a = gen.polynomial(R);
    const auto b = gen.polynomial(R);
    const int v = gen.integer(0, R.num_vars() - 1);
    CHECK(partial_derivative(a * b, v) == partial_derivative(a, v) * b + a * partial_derivative(b, v));
  }
}
