#include "qcr/quadric.hpp"

#include <algorithm>
#include <limits>

namespace qcr {

namespace {

std::string entry_name(std::size_t k, Eigen::Index i, Eigen::Index j) {
  return "forms[" + std::to_string(k) + "][" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

Polynomial build_form_polynomial(const VarSpace& space, const HermitianForm& a) {
  Polynomial p(space);
  Exponents e(space.num_vars(), 0);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      e.assign(e.size(), 0);
      e[space.z(static_cast<int>(i))] += 1;
      e[space.zbar(static_cast<int>(j))] += 1;
      p.add_term(e, a(i, j));
    }
  }
  return p;
}

}  // namespace

QuadricModel::QuadricModel(int n, std::vector<HermitianForm> forms) : n_(n), forms_(std::move(forms)) {
  if (n_ < 1) throw ParseError("model needs n >= 1");
  if (forms_.empty()) throw ParseError("model needs d >= 1 forms");
  for (std::size_t k = 0; k < forms_.size(); ++k) {
    const HermitianForm& a = forms_[k];
    if (a.rows() != n_ || a.cols() != n_)
      throw ParseError("forms[" + std::to_string(k) + "] is " + std::to_string(a.rows()) + "x" +
                       std::to_string(a.cols()) + ", expected " + std::to_string(n_) + "x" + std::to_string(n_));
    for (Eigen::Index i = 0; i < n_; ++i) {
      for (Eigen::Index j = i; j < n_; ++j) {
        if (a(i, j) != conj(a(j, i)))
          throw ParseError("forms[" + std::to_string(k) + "] is not Hermitian: " + entry_name(k, i, j) + " = " +
                           serialize_gaussian(a(i, j)) + " but " + entry_name(k, j, i) + " = " +
                           serialize_gaussian(a(j, i)));
      }
    }
  }
  const VarSpace space = real_space();
  polys_.reserve(forms_.size());
  for (const auto& a : forms_) polys_.push_back(build_form_polynomial(space, a));
}

QuadricModel paper_model() {
  const GaussianRational i = GaussianRational::i();
  std::vector<HermitianForm> forms(5, HermitianForm::Zero(4, 4));
  forms[0](0, 1) = 1;
  forms[0](1, 0) = 1;
  forms[1](0, 1) = -i;
  forms[1](1, 0) = i;
  forms[2](0, 3) = 1;
  forms[2](1, 2) = 1;
  forms[2](2, 1) = 1;
  forms[2](3, 0) = 1;
  forms[3](0, 0) = 1;
  forms[4](1, 1) = 1;
  return QuadricModel(4, std::move(forms));
}

Polynomial form_polynomial(const QuadricModel& model, int k) {
  if (k < 1 || k > model.d())
    throw UsageError("form index " + std::to_string(k) + " outside 1.." + std::to_string(model.d()));
  return model.form_polynomials()[static_cast<std::size_t>(k - 1)];
}

IndependenceResult forms_linearly_independent(const QuadricModel& model) {
  const int n = model.n();
  const int d = model.d();
  DenseMatrix<Rational> flat(d, 2 * n * n);
  for (int k = 0; k < d; ++k) {
    const HermitianForm& a = model.form(k);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        flat(k, 2 * (i * n + j)) = a(i, j).re();
        flat(k, 2 * (i * n + j) + 1) = a(i, j).im();
      }
    }
  }
  const Eigen::Index rank = exact_rank(flat);
  return {rank == d, rank};
}

bool levi_nondegenerate(const QuadricModel& model) {
  const int n = model.n();
  const int d = model.d();
  DenseMatrix<GaussianRational> stacked(static_cast<Eigen::Index>(d) * n, n);
  for (int k = 0; k < d; ++k) stacked.middleRows(static_cast<Eigen::Index>(k) * n, n) = model.form(k);
  return exact_rank(stacked) == n;
}

bool finite_type_two(const QuadricModel& model) { return forms_linearly_independent(model).independent; }

HermitianForm combination(const QuadricModel& model, const std::vector<int>& c) {
  if (static_cast<int>(c.size()) != model.d()) throw UsageError("coefficient vector length must equal d");
  HermitianForm sum = HermitianForm::Zero(model.n(), model.n());
  for (int k = 0; k < model.d(); ++k) {
    if (c[static_cast<std::size_t>(k)] == 0) continue;
    const GaussianRational s(c[static_cast<std::size_t>(k)]);
    for (int i = 0; i < model.n(); ++i)
      for (int j = 0; j < model.n(); ++j) sum(i, j) += s * model.form(k)(i, j);
  }
  return sum;
}

std::optional<std::vector<int>> tumanov_witness(const QuadricModel& model, std::uint64_t budget) {
  const int base = model.n() + 1;
  std::uint64_t grid = 1;
  for (int k = 0; k < model.d(); ++k) {
    if (grid > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(base) ||
        grid * static_cast<std::uint64_t>(base) > budget)
      throw ResourceError("Tumanov grid {0.." + std::to_string(model.n()) + "}^" + std::to_string(model.d()) +
                          " exceeds the budget of " + std::to_string(budget) +
                          " points; raise --budget or use a randomized search");
    grid *= static_cast<std::uint64_t>(base);
  }

  // Odometer over the grid with the last coordinate varying fastest.
  std::vector<int> c(static_cast<std::size_t>(model.d()), 0);
  for (std::uint64_t step = 0; step < grid; ++step) {
    if (!exact_determinant(combination(model, c)).is_zero()) return c;
    for (int k = model.d() - 1; k >= 0; --k) {
      if (++c[static_cast<std::size_t>(k)] < base) break;
      c[static_cast<std::size_t>(k)] = 0;
    }
  }
  return std::nullopt;
}

std::vector<std::pair<int, int>> quadratic_pairs(int d) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) pairs.emplace_back(i, j);
  return pairs;
}

std::vector<QuadraticRelation> quadratic_syzygies(const QuadricModel& model) {
  const auto pairs = quadratic_pairs(model.d());
  const auto& p = model.form_polynomials();

  // One row per (monomial, real/imaginary part); one column per product.
  std::map<std::pair<Exponents, int>, SparseRow, std::less<>> rows;
  for (std::size_t col = 0; col < pairs.size(); ++col) {
    const Polynomial prod = p[static_cast<std::size_t>(pairs[col].first)] * p[static_cast<std::size_t>(pairs[col].second)];
    for (const auto& [e, c] : prod.terms()) {
      if (sgn(c.re()) != 0) rows[{e, 0}].emplace_back(col, c.re());
      if (sgn(c.im()) != 0) rows[{e, 1}].emplace_back(col, c.im());
    }
  }
  SparseSystem system;
  system.num_unknowns = pairs.size();
  for (auto& [_, row] : rows) system.rows.push_back(std::move(row));

  std::vector<QuadraticRelation> out;
  for (auto& v : exact_kernel(system)) out.push_back({std::move(v)});
  return out;
}

Polynomial expand_relation(const QuadricModel& model, const QuadraticRelation& relation) {
  const auto pairs = quadratic_pairs(model.d());
  if (relation.coefficients.size() != pairs.size()) throw UsageError("relation has the wrong number of coefficients");
  const auto& p = model.form_polynomials();
  Polynomial sum(model.real_space());
  for (std::size_t col = 0; col < pairs.size(); ++col) {
    if (sgn(relation.coefficients[col]) == 0) continue;
    sum += (p[static_cast<std::size_t>(pairs[col].first)] * p[static_cast<std::size_t>(pairs[col].second)]) *
           GaussianRational(relation.coefficients[col]);
  }
  return sum;
}

}  // namespace qcr
