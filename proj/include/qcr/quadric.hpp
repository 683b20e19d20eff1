#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcr/linalg.hpp"
#include "qcr/polyring.hpp"

namespace qcr {

using HermitianForm = DenseMatrix<GaussianRational>;

/// Quadric model Im w_k = P_k(z, zbar), k = 1..d, with P_k = sum_ij (A_k)_ij z_i zbar_j.
///
/// The pairing puts conjugates on the right-hand index: with this convention
/// the matrix entry (A)_12 = -i contributes -i z_1 zbar_2, which is how the
/// second defining form of the built-in model reads.
class QuadricModel {
 public:
  /// Validates shapes and Hermitian symmetry; throws ParseError naming the
  /// first offending entry.
  QuadricModel(int n, std::vector<HermitianForm> forms);

  int n() const { return n_; }
  int d() const { return static_cast<int>(forms_.size()); }
  const std::vector<HermitianForm>& forms() const { return forms_; }
  const HermitianForm& form(int k) const { return forms_.at(static_cast<std::size_t>(k)); }

  VarSpace holomorphic_space() const { return VarSpace::holomorphic(n_, d()); }
  VarSpace real_space() const { return VarSpace::real_restricted(n_, d()); }

  /// P_1..P_d, computed once.
  const std::vector<Polynomial>& form_polynomials() const { return polys_; }

 private:
  int n_;
  std::vector<HermitianForm> forms_;
  std::vector<Polynomial> polys_;
};

/// n = 4, d = 5 model with the five forms A_1..A_5.
QuadricModel paper_model();

/// P_k for 1 <= k <= d.
Polynomial form_polynomial(const QuadricModel& model, int k);

struct IndependenceResult {
  bool independent = false;
  Eigen::Index rank = 0;
};

/// Rank over Q of the forms flattened to real vectors of length 2n^2.
IndependenceResult forms_linearly_independent(const QuadricModel& model);

/// The forms have no common kernel vector.
bool levi_nondegenerate(const QuadricModel& model);

/// For quadrics, finite type with 2 as the only Hormander number is
/// equivalent to linear independence of the forms.
bool finite_type_two(const QuadricModel& model);

inline constexpr std::uint64_t kDefaultTumanovBudget = 1'000'000;

/// First c in {0..n}^d (lexicographic) with det(sum c_j A_j) != 0. An empty
/// result is a certificate: the determinant has degree <= n in each c_j, so a
/// nonzero one cannot vanish on the whole grid. Throws ResourceError when
/// (n+1)^d exceeds `budget`.
std::optional<std::vector<int>> tumanov_witness(const QuadricModel& model,
                                                std::uint64_t budget = kDefaultTumanovBudget);

HermitianForm combination(const QuadricModel& model, const std::vector<int>& c);

/// A quadratic relation sum_{i<=j} lambda_ij P_i P_j = 0; coefficients are
/// indexed by pair in the order (1,1), (1,2), ..., (1,d), (2,2), ..., (d,d).
struct QuadraticRelation {
  std::vector<Rational> coefficients;
};

std::vector<std::pair<int, int>> quadratic_pairs(int d);

/// Reduced row-echelon basis of all rational relations among the P_i P_j.
std::vector<QuadraticRelation> quadratic_syzygies(const QuadricModel& model);

/// sum lambda_ij P_i P_j expanded; zero for every true relation.
Polynomial expand_relation(const QuadricModel& model, const QuadraticRelation& relation);

}  // namespace qcr
