#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "generators.hpp"
#include "qcr/linalg.hpp"

using namespace qcr;
using qcr::testing::Gen;

namespace {

// Cofactor expansion along the first row; independent of elimination.
template <typename Scalar>
Scalar cofactor_det(const DenseMatrix<Scalar>& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  Scalar det(0);
  for (Eigen::Index c = 0; c < n; ++c) {
    DenseMatrix<Scalar> minor(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i)
      for (Eigen::Index j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    const Scalar term = m(0, c) * cofactor_det(minor);
    det = (c % 2 == 0) ? Scalar(det + term) : Scalar(det - term);
  }
  return det;
}

// Rank by brute force: largest k with a nonzero k x k minor.
Eigen::Index minor_rank(const DenseMatrix<Rational>& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  for (Eigen::Index k = std::min(rows, cols); k > 0; --k) {
    std::vector<bool> rsel(static_cast<std::size_t>(rows), false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::vector<bool> csel(static_cast<std::size_t>(cols), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        DenseMatrix<Rational> sub(k, k);
        for (Eigen::Index i = 0, si = 0; i < rows; ++i) {
          if (!rsel[static_cast<std::size_t>(i)]) continue;
          for (Eigen::Index j = 0, sj = 0; j < cols; ++j)
            if (csel[static_cast<std::size_t>(j)]) sub(si, sj++) = m(i, j);
          ++si;
        }
        if (sgn(cofactor_det(sub)) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

SparseSystem to_sparse(const DenseMatrix<Rational>& m) {
  SparseSystem s;
  s.num_unknowns = static_cast<std::size_t>(m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    SparseRow row;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) row.emplace_back(static_cast<std::size_t>(j), m(i, j));
    s.rows.push_back(std::move(row));
  }
  return s;
}

DenseMatrix<Rational> random_matrix(Gen& gen, Eigen::Index rows, Eigen::Index cols, double density) {
  DenseMatrix<Rational> m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = gen.coin(density) ? gen.rational(5) : Rational(0);
  // Occasionally duplicate a row combination so kernels are larger.
  if (rows >= 3 && gen.coin()) m.row(rows - 1) = m.row(0) * Rational(2) - m.row(1) * gen.rational(3);
  return m;
}

}  // namespace

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
  Gen gen(201);
  for (int t = 0; t < 300; ++t) {
    const int n = gen.integer(1, 5);
    DenseMatrix<GaussianRational> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = gen.coin(0.7) ? gen.gaussian(4) : GaussianRational(0);
    CHECK(exact_determinant(m) == cofactor_det(m));
  }
  CHECK_THROWS_AS(exact_determinant(DenseMatrix<Rational>(2, 3)), UsageError);
}

TEST_CASE("Bareiss rank agrees with the largest nonzero minor") {
  Gen gen(203);
  for (int t = 0; t < 300; ++t) {
    const auto m = random_matrix(gen, gen.integer(1, 4), gen.integer(1, 5), 0.5);
    CHECK(exact_rank(m) == minor_rank(m));
  }
}

TEST_CASE("exact_kernel examples") {
  SparseSystem empty;
  empty.num_unknowns = 3;
  const auto full = exact_kernel(empty);
  REQUIRE(full.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(full[i][j] == Rational(i == j ? 1 : 0));

  SparseSystem identity;
  identity.num_unknowns = 3;
  for (std::size_t i = 0; i < 3; ++i) identity.rows.push_back({{i, Rational(1)}});
  CHECK(exact_kernel(identity).empty());

  // x0 + x1 = 0, x2 = 2 x3: kernel spanned by (1,-1,0,0) and (0,0,1,1/2) in RREF.
  SparseSystem small;
  small.num_unknowns = 4;
  small.rows.push_back({{0, Rational(1)}, {1, Rational(1)}});
  small.rows.push_back({{2, Rational(1)}, {3, Rational(-2)}});
  const auto k = exact_kernel(small);
  REQUIRE(k.size() == 2);
  CHECK(k[0] == RationalVector{1, -1, 0, 0});
  CHECK(k[1] == RationalVector{0, 0, 1, Rational(1, 2)});
}

TEST_CASE("exact_kernel vectors satisfy every row and have the right count") {
  Gen gen(207);
  for (int t = 0; t < 1000; ++t) {
    const auto m = random_matrix(gen, gen.integer(1, 6), gen.integer(1, 7), 0.4);
    const auto sys = to_sparse(m);
    const auto kernel = exact_kernel(sys);
    CHECK(static_cast<Eigen::Index>(kernel.size()) == m.cols() - exact_rank(m));
    for (const auto& v : kernel)
      for (const auto& row : sys.rows) CHECK(sgn(dot(row, v)) == 0);
    // Canonical: the basis is its own RREF.
    CHECK(rref(kernel) == kernel);
  }
}

TEST_CASE("exact_kernel does not depend on row order or row scaling") {
  Gen gen(211);
  for (int t = 0; t < 300; ++t) {
    const auto m = random_matrix(gen, gen.integer(2, 6), gen.integer(2, 7), 0.5);
    auto sys = to_sparse(m);
    const auto k1 = exact_kernel(sys);
    std::shuffle(sys.rows.begin(), sys.rows.end(), gen.engine());
    for (auto& row : sys.rows)
      for (auto& [c, q] : row) q *= Rational(-3, 7);
    CHECK(exact_kernel(sys) == k1);
  }
}

TEST_CASE("in_span") {
  const std::vector<RationalVector> basis = rref({{1, 2, 0}, {0, 0, 1}});
  CHECK(in_span(basis, {2, 4, -3}));
  CHECK_FALSE(in_span(basis, {0, 1, 0}));
  CHECK(in_span({}, {0, 0, 0}));
}
