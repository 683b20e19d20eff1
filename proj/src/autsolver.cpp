#include "qcr/autsolver.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace qcr {

namespace {

void enumerate(const VarSpace& space, int var, int remaining, Exponents& e, std::vector<Exponents>& out) {
  if (var == space.num_vars()) {
    if (remaining == 0) out.push_back(e);
    return;
  }
  const int w = space.weight(var);
  for (int x = 0; x * w <= remaining; ++x) {
    e[static_cast<std::size_t>(var)] = x;
    enumerate(space, var + 1, remaining - x * w, e, out);
  }
  e[static_cast<std::size_t>(var)] = 0;
}

/// Representative of the conjugate pair {m, conj m}: the lexicographically
/// smaller exponent vector.
bool is_representative(const VarSpace& s, const Exponents& e, bool& self_conjugate) {
  Exponents swapped = e;
  for (int j = 0; j < s.n; ++j) std::swap(swapped[static_cast<std::size_t>(s.z(j))], swapped[static_cast<std::size_t>(s.zbar(j))]);
  self_conjugate = swapped == e;
  return !(swapped < e);
}

ExactLinearSystem assemble(const QuadricModel& model, const UnknownLayout& layout) {
  const TangencyEvaluator eval(model);
  const VarSpace& rs = eval.real_space();
  using Key = std::tuple<int, Exponents, int>;
  std::map<Key, SparseRow> rows;

  // Columns are visited in increasing order, so every row stays sorted.
  auto add_column = [&](std::size_t col, const std::vector<Polynomial>& residual) {
    for (int k = 0; k < static_cast<int>(residual.size()); ++k) {
      for (const auto& [e, c] : residual[static_cast<std::size_t>(k)].terms()) {
        bool self_conj = false;
        if (!is_representative(rs, e, self_conj)) continue;
        if (sgn(c.re()) != 0) rows[Key{k, e, 0}].emplace_back(col, c.re());
        if (!self_conj && sgn(c.im()) != 0) rows[Key{k, e, 1}].emplace_back(col, c.im());
      }
    }
  };

  for (std::size_t s = 0; s < layout.slots.size(); ++s) {
    const Slot& slot = layout.slots[s];
    auto [re_unit, im_unit] = eval.unit_residuals(slot.is_g, slot.index, slot.exponents);
    add_column(2 * s, re_unit);
    add_column(2 * s + 1, im_unit);
  }

  ExactLinearSystem system;
  system.num_unknowns = layout.num_unknowns();
  system.rows.reserve(rows.size());
  for (auto& [_, row] : rows) system.rows.push_back(std::move(row));
  return system;
}

}  // namespace

std::vector<Exponents> weighted_monomials(const VarSpace& space, int degree) {
  std::vector<Exponents> out;
  if (degree < 0) return out;
  Exponents e(static_cast<std::size_t>(space.num_vars()), 0);
  enumerate(space, 0, degree, e, out);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

UnknownLayout make_layout(const QuadricModel& model, int weight, LayoutOrder order) {
  if (weight < -2) throw UsageError("weight must be >= -2");
  UnknownLayout layout;
  layout.weight = weight;
  layout.space = model.holomorphic_space();
  const auto f_monos = weighted_monomials(layout.space, weight + 1);
  const auto g_monos = weighted_monomials(layout.space, weight + 2);
  for (int j = 0; j < model.n(); ++j)
    for (const auto& e : f_monos) layout.slots.push_back({false, j, e});
  for (int k = 0; k < model.d(); ++k)
    for (const auto& e : g_monos) layout.slots.push_back({true, k, e});
  if (order == LayoutOrder::reversed) std::reverse(layout.slots.begin(), layout.slots.end());
  return layout;
}

ExactLinearSystem build_system(const QuadricModel& model, const UnknownLayout& layout) {
  if (!(layout.space == model.holomorphic_space())) throw UsageError("layout does not belong to this model");
  return assemble(model, layout);
}

BuiltSystem build_system(const QuadricModel& model, int weight, LayoutOrder order) {
  BuiltSystem out;
  out.layout = make_layout(model, weight, order);
  out.system = assemble(model, out.layout);
  return out;
}

HoloVectorField field_from_vector(const UnknownLayout& layout, const RationalVector& v) {
  if (v.size() != layout.num_unknowns()) throw UsageError("vector length does not match layout");
  HoloVectorField field(layout.space);
  for (std::size_t s = 0; s < layout.slots.size(); ++s) {
    const GaussianRational c(v[2 * s], v[2 * s + 1]);
    if (c.is_zero()) continue;
    const Slot& slot = layout.slots[s];
    Polynomial& p = slot.is_g ? field.g(slot.index) : field.f(slot.index);
    p.add_term(slot.exponents, c);
  }
  return field;
}

std::optional<RationalVector> vector_from_field(const UnknownLayout& layout, const HoloVectorField& field) {
  if (!(field.space() == layout.space)) throw UsageError("field does not belong to this layout");
  std::map<std::tuple<bool, int, Exponents>, std::size_t> index;
  for (std::size_t s = 0; s < layout.slots.size(); ++s) {
    const Slot& slot = layout.slots[s];
    index.emplace(std::make_tuple(slot.is_g, slot.index, slot.exponents), s);
  }
  RationalVector v(layout.num_unknowns(), Rational(0));
  auto place = [&](bool is_g, int i, const Polynomial& p) {
    for (const auto& [e, c] : p.terms()) {
      auto it = index.find(std::make_tuple(is_g, i, e));
      if (it == index.end()) return false;
      v[2 * it->second] = c.re();
      v[2 * it->second + 1] = c.im();
    }
    return true;
  };
  for (int j = 0; j < field.n(); ++j)
    if (!place(false, j, field.f(j))) return std::nullopt;
  for (int k = 0; k < field.d(); ++k)
    if (!place(true, k, field.g(k))) return std::nullopt;
  return v;
}

bool GradedComponentReport::contains(const HoloVectorField& field) const {
  if (field.is_zero()) return true;
  const auto v = vector_from_field(layout, field);
  return v && in_span(kernel, *v);
}

GradedComponentReport graded_component(const QuadricModel& model, int weight, LayoutOrder order) {
  auto built = build_system(model, weight, order);
  GradedComponentReport report;
  report.weight = weight;
  report.kernel = exact_kernel(built.system);
  report.real_dimension = static_cast<int>(report.kernel.size());
  for (const auto& v : report.kernel) report.basis.push_back(field_from_vector(built.layout, v));
  report.layout = std::move(built.layout);
  return report;
}

std::optional<HoloVectorField> jet_counterexample(const QuadricModel& model, int jet_order, int max_weight) {
  if (jet_order < 0) throw UsageError("jet order must be >= 0");
  for (int weight = -2; weight <= max_weight; ++weight) {
    auto built = build_system(model, weight);
    bool any_admissible = false;
    for (std::size_t s = 0; s < built.layout.slots.size(); ++s) {
      if (ordinary_degree(built.layout.slots[s].exponents) > jet_order) {
        any_admissible = true;
        continue;
      }
      built.system.rows.push_back({{2 * s, Rational(1)}});
      built.system.rows.push_back({{2 * s + 1, Rational(1)}});
    }
    if (!any_admissible) continue;
    const auto kernel = exact_kernel(built.system);
    if (!kernel.empty()) return field_from_vector(built.layout, kernel.front());
  }
  return std::nullopt;
}

}  // namespace qcr
