#include "qcr/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qcr {

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

/// Divide by content, leading coefficient positive.
void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [_, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(row.front().second) < 0) g = -g;
  if (g == 1) return;
  for (auto& [_, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

/// Integer row with the same span as a rational row.
IntRow to_integer_row(const SparseRow& row, const std::map<std::size_t, std::size_t>& local) {
  Integer den = 1;
  for (const auto& [_, q] : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, q] : row) {
    Integer v = den / q.get_den() * q.get_num();
    out.emplace_back(local.at(c), std::move(v));
  }
  make_primitive(out);
  return out;
}

/// Returns b*r - a*p where a, b are the coefficients of `col` in r and p,
/// scaled down by gcd(a, b), so that column `col` cancels.
IntRow eliminate(const IntRow& r, const IntRow& p, std::size_t col) {
  auto find_coeff = [col](const IntRow& row) -> const Integer& {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    return it->second;
  };
  const Integer& a = find_coeff(r);
  const Integer& b = find_coeff(p);
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const Integer rs = b / g;
  const Integer ps = a / g;

  IntRow out;
  out.reserve(r.size() + p.size());
  auto ri = r.begin();
  auto pi = p.begin();
  Integer tmp;
  while (ri != r.end() || pi != p.end()) {
    if (pi == p.end() || (ri != r.end() && ri->first < pi->first)) {
      out.emplace_back(ri->first, rs * ri->second);
      ++ri;
    } else if (ri == r.end() || pi->first < ri->first) {
      out.emplace_back(pi->first, -ps * pi->second);
      ++pi;
    } else {
      tmp = rs * ri->second - ps * pi->second;
      if (sgn(tmp) != 0) out.emplace_back(ri->first, tmp);
      ++ri;
      ++pi;
    }
  }
  make_primitive(out);
  return out;
}

/// Integer row-echelon form, fully reduced: every pivot column is zero in all
/// other rows. Returned as map from pivot column to row.
std::map<std::size_t, IntRow> reduced_echelon(std::vector<IntRow> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const IntRow& a, const IntRow& b) { return a.size() < b.size(); });
  std::map<std::size_t, IntRow> pivots;
  for (auto& row : rows) {
    IntRow r = std::move(row);
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        const std::size_t c = r.front().first;
        pivots.emplace(c, std::move(r));
        break;
      }
      r = eliminate(r, it->second, r.front().first);
    }
  }
  // Back substitution, last pivot first, so rows used for elimination are
  // already free of other pivot columns.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    IntRow& row = it->second;
    std::size_t idx = 1;
    while (idx < row.size()) {
      const std::size_t c = row[idx].first;
      auto p = pivots.find(c);
      if (p == pivots.end()) {
        ++idx;
        continue;
      }
      row = eliminate(row, p->second, c);
      // Entries before c are unaffected; resume scanning from the lead.
      idx = 1;
    }
  }
  return pivots;
}

}  // namespace

Rational dot(const SparseRow& row, const RationalVector& v) {
  Rational s = 0;
  for (const auto& [c, q] : row) s += q * v.at(c);
  return s;
}

std::vector<RationalVector> rref(std::vector<RationalVector> vectors) {
  std::vector<RationalVector> out;
  if (vectors.empty()) return out;
  const std::size_t cols = vectors.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < vectors.size(); ++c) {
    std::size_t piv = r;
    while (piv < vectors.size() && sgn(vectors[piv][c]) == 0) ++piv;
    if (piv == vectors.size()) continue;
    std::swap(vectors[piv], vectors[r]);
    const Rational lead = vectors[r][c];
    for (auto& x : vectors[r]) x /= lead;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (i == r || sgn(vectors[i][c]) == 0) continue;
      const Rational f = vectors[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(vectors[r][j]) != 0) vectors[i][j] -= f * vectors[r][j];
      }
    }
    ++r;
  }
  vectors.resize(r);
  return vectors;
}

bool in_span(const std::vector<RationalVector>& rref_basis, const RationalVector& v) {
  RationalVector rest = v;
  for (const auto& b : rref_basis) {
    if (b.size() != rest.size()) throw UsageError("vector length does not match basis");
    auto lead = std::find_if(b.begin(), b.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (lead == b.end()) continue;
    const std::size_t c = static_cast<std::size_t>(lead - b.begin());
    const Rational f = rest[c];
    if (sgn(f) == 0) continue;
    for (std::size_t j = c; j < rest.size(); ++j) rest[j] -= f * b[j];
  }
  return std::all_of(rest.begin(), rest.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::vector<RationalVector> exact_kernel(const SparseSystem& system) {
  const std::size_t n = system.num_unknowns;
  DisjointSets sets(n);
  std::vector<bool> touched(n, false);
  for (const auto& row : system.rows) {
    for (const auto& [c, q] : row) {
      if (c >= n) throw UsageError("row entry beyond the unknown count");
      touched[c] = true;
      if (c != row.front().first) sets.unite(row.front().first, c);
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> component_cols;
  for (std::size_t c = 0; c < n; ++c) {
    if (touched[c]) component_cols[sets.find(c)].push_back(c);
  }
  std::map<std::size_t, std::vector<const SparseRow*>> component_rows;
  for (const auto& row : system.rows) {
    if (!row.empty()) component_rows[sets.find(row.front().first)].push_back(&row);
  }

  std::vector<RationalVector> kernel;
  for (std::size_t c = 0; c < n; ++c) {
    if (touched[c]) continue;
    RationalVector v(n, Rational(0));
    v[c] = 1;
    kernel.push_back(std::move(v));
  }

  for (const auto& [root, cols] : component_cols) {
    std::map<std::size_t, std::size_t> local;
    for (std::size_t i = 0; i < cols.size(); ++i) local.emplace(cols[i], i);
    std::vector<IntRow> rows;
    for (const SparseRow* row : component_rows[root]) rows.push_back(to_integer_row(*row, local));
    const auto pivots = reduced_echelon(std::move(rows));

    // Free column f contributes v with v[f] = 1 and v[p] = -R_p[f] / R_p[p].
    std::map<std::size_t, RationalVector> by_free;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (pivots.count(i)) continue;
      RationalVector v(n, Rational(0));
      v[cols[i]] = 1;
      by_free.emplace(i, std::move(v));
    }
    for (const auto& [pc, row] : pivots) {
      const Integer& lead = row.front().second;
      for (std::size_t k = 1; k < row.size(); ++k) {
        Rational val(-row[k].second, lead);
        val.canonicalize();
        by_free.at(row[k].first)[cols[pc]] = std::move(val);
      }
    }
    for (auto& [_, v] : by_free) kernel.push_back(std::move(v));
  }
  return rref(std::move(kernel));
}

}  // namespace qcr
