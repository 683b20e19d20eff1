#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcr/exactnum.hpp"

namespace qcr {

enum class Flavor {
  holomorphic,      // z_1..z_n, w_1..w_d
  real_restricted,  // z_1..z_n, zbar_1..zbar_n, u_1..u_d
};

/// Variable layout of a polynomial ring. Variables are numbered in the fixed
/// order z, then zbar (real-restricted only), then w or u.
struct VarSpace {
  int n = 1;
  int d = 1;
  Flavor flavor = Flavor::holomorphic;

  static VarSpace holomorphic(int n, int d);
  static VarSpace real_restricted(int n, int d);

  int num_vars() const { return flavor == Flavor::holomorphic ? n + d : 2 * n + d; }
  int z(int j) const { return j; }
  int zbar(int j) const;
  /// w_k in the holomorphic ring, u_k in the real-restricted ring.
  int w(int k) const { return (flavor == Flavor::holomorphic ? n : 2 * n) + k; }
  int u(int k) const { return w(k); }

  bool is_z(int var) const { return var < n; }
  bool is_zbar(int var) const { return flavor == Flavor::real_restricted && var >= n && var < 2 * n; }
  bool is_w(int var) const { return var >= (flavor == Flavor::holomorphic ? n : 2 * n) && var < num_vars(); }
  /// z-like variables carry weight 1, w/u variables weight 2.
  int weight(int var) const { return is_w(var) ? 2 : 1; }

  std::string var_name(int var) const;

  friend bool operator==(const VarSpace&, const VarSpace&) = default;
};

using Exponents = std::vector<int>;

enum class Grading { ordinary, weighted };

int ordinary_degree(const Exponents& e);
int weighted_degree(const VarSpace& space, const Exponents& e);

/// Graded lexicographic order: lower ordinary degree first, ties broken
/// lexicographically with larger exponents of earlier variables first.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Exponents, GaussianRational, GrlexLess>;

  Polynomial() = default;
  explicit Polynomial(VarSpace space) : space_(space) {}
  Polynomial(VarSpace space, TermMap terms);

  static Polynomial constant(VarSpace space, const GaussianRational& c);
  static Polynomial variable(VarSpace space, int var);
  static Polynomial monomial(VarSpace space, Exponents e, const GaussianRational& c = 1);

  const VarSpace& space() const { return space_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  GaussianRational coeff(const Exponents& e) const;
  /// Adds c * e in place, dropping the term if it cancels.
  void add_term(const Exponents& e, const GaussianRational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= GaussianRational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  friend Polynomial operator*(const GaussianRational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

  Polynomial pow(int e) const;

  /// Human-readable form such as "i*z1*zb2 - 1/2*u1^2".
  std::string to_string() const;

 private:
  void check_space(const Polynomial& o) const;

  VarSpace space_;
  TermMap terms_;
};

enum class RingOp { add, sub, mul };
Polynomial ring_arith(const Polynomial& p, const Polynomial& q, RingOp op);

/// Swaps z_j <-> zbar_j exponents, fixes u_k and conjugates coefficients.
/// Only defined on the real-restricted ring.
Polynomial conjugate(const Polynomial& p);

Polynomial partial_derivative(const Polynomial& p, int var);

/// Replaces w_k by u_k + i*forms[k] (forms are real-restricted) and moves p
/// into the real-restricted ring. Powers of the substitutes are cached, so one
/// instance should be reused across many polynomials.
class WSubstitution {
 public:
  explicit WSubstitution(std::vector<Polynomial> forms);

  const VarSpace& target() const { return target_; }
  Polynomial operator()(const Polynomial& p) const;
  /// Image of the single holomorphic monomial e.
  const Polynomial& image(const Exponents& e) const;

 private:
  const Polynomial& power(int k, int e) const;

  int n_;
  int d_;
  VarSpace target_;
  std::vector<Polynomial> forms_;
  mutable std::vector<std::vector<Polynomial>> powers_;
  mutable std::map<Exponents, Polynomial> cache_;
};

Polynomial substitute_w(const Polynomial& p, std::span<const Polynomial> forms);

/// (Re p, Im p) = ((p + conj p)/2, (p - conj p)/(2i)).
std::pair<Polynomial, Polynomial> real_imag_parts(const Polynomial& p);

std::map<int, Polynomial> homogeneous_parts(const Polynomial& p, Grading grading);

/// Minimal ordinary total degree of a term; nullopt encodes infinity (p = 0).
std::optional<int> vanishing_order(const Polynomial& p);

}  // namespace qcr
