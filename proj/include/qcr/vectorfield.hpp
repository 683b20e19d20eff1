#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcr/polyring.hpp"
#include "qcr/quadric.hpp"

namespace qcr {

/// V = sum_j f_j d/dz_j + sum_k g_k d/dw_k with holomorphic polynomial
/// coefficients.
class HoloVectorField {
 public:
  explicit HoloVectorField(VarSpace space);
  HoloVectorField(VarSpace space, std::vector<Polynomial> f, std::vector<Polynomial> g);

  const VarSpace& space() const { return space_; }
  int n() const { return space_.n; }
  int d() const { return space_.d; }

  const std::vector<Polynomial>& f() const { return f_; }
  const std::vector<Polynomial>& g() const { return g_; }
  Polynomial& f(int j) { return f_.at(static_cast<std::size_t>(j)); }
  Polynomial& g(int k) { return g_.at(static_cast<std::size_t>(k)); }
  const Polynomial& f(int j) const { return f_.at(static_cast<std::size_t>(j)); }
  const Polynomial& g(int k) const { return g_.at(static_cast<std::size_t>(k)); }

  bool is_zero() const;

  HoloVectorField& operator+=(const HoloVectorField& o);
  HoloVectorField& operator-=(const HoloVectorField& o);
  HoloVectorField& operator*=(const GaussianRational& c);
  /// Multiplies every coefficient by a holomorphic polynomial.
  HoloVectorField& operator*=(const Polynomial& h);

  friend HoloVectorField operator+(HoloVectorField a, const HoloVectorField& b) { return a += b; }
  friend HoloVectorField operator-(HoloVectorField a, const HoloVectorField& b) { return a -= b; }
  friend HoloVectorField operator*(const GaussianRational& c, HoloVectorField v) { return v *= c; }
  friend HoloVectorField operator*(const Polynomial& h, HoloVectorField v) { return v *= h; }
  friend bool operator==(const HoloVectorField& a, const HoloVectorField& b) {
    return a.space_ == b.space_ && a.f_ == b.f_ && a.g_ == b.g_;
  }

  std::string to_string() const;

 private:
  void check_space(const HoloVectorField& o) const;

  VarSpace space_;
  std::vector<Polynomial> f_;
  std::vector<Polynomial> g_;
};

/// X, Y, Z, U, Y0, Y1, Z1, U1, T and the weighted Euler field E on the
/// built-in n = 4, d = 5 model.
std::map<std::string, HoloVectorField> paper_fields();

/// Restriction of V's action to M: substitution w -> u + iP and the
/// derivatives dP_k/dz_j, precomputed once per model.
class TangencyEvaluator {
 public:
  explicit TangencyEvaluator(const QuadricModel& model);

  const VarSpace& real_space() const { return subst_.target(); }

  /// Component k of sum_j f_j dP_k/dz_j restricted to M.
  std::vector<Polynomial> apply_to_forms(const HoloVectorField& v) const;
  /// R_k = Im g_k - 2 Re(sum_j f_j dP_k/dz_j), restricted to M.
  std::vector<Polynomial> residual(const HoloVectorField& v) const;

  /// Residual of the single-term field c * x^e placed in f_j (is_g = false)
  /// or g_k (is_g = true); added into `out`.
  void add_monomial_residual(bool is_g, int index, const Exponents& e, const GaussianRational& c,
                             std::vector<Polynomial>& out) const;

  /// Residuals of the single-term fields x^e and i*x^e in slot (is_g, index).
  std::pair<std::vector<Polynomial>, std::vector<Polynomial>> unit_residuals(bool is_g, int index,
                                                                             const Exponents& e) const;

 private:
  void check(const HoloVectorField& v) const;

  int n_;
  int d_;
  WSubstitution subst_;
  std::vector<std::vector<Polynomial>> dp_;  // dp_[k][j] = dP_k/dz_j
};

std::vector<Polynomial> apply_to_forms(const HoloVectorField& v, const QuadricModel& model);
std::vector<Polynomial> tangency_residual(const HoloVectorField& v, const QuadricModel& model);
bool is_infinitesimal_automorphism(const HoloVectorField& v, const QuadricModel& model);

/// Minimal ordinary degree over every coefficient term; nullopt for V = 0.
std::optional<int> field_vanishing_order(const HoloVectorField& v);

/// Splits V into pieces of weight mu: f_j of weighted degree mu+1 and g_k of
/// weighted degree mu+2.
std::map<int, HoloVectorField> weighted_decomposition(const HoloVectorField& v);

}  // namespace qcr
