#pragma once

#include <optional>
#include <vector>

#include "qcr/linalg.hpp"
#include "qcr/quadric.hpp"
#include "qcr/vectorfield.hpp"

namespace qcr {

/// One complex coefficient of a candidate field: the monomial `exponents` in
/// f_index (is_g = false) or g_index (is_g = true). Slot s owns the real
/// unknowns 2s (real part) and 2s+1 (imaginary part).
struct Slot {
  bool is_g = false;
  int index = 0;
  Exponents exponents;

  friend bool operator==(const Slot&, const Slot&) = default;
};

enum class LayoutOrder {
  canonical,  // f_1..f_n then g_1..g_d, graded-lex inside each component
  reversed,   // the canonical list backwards
};

struct UnknownLayout {
  int weight = 0;
  VarSpace space;
  std::vector<Slot> slots;

  std::size_t num_unknowns() const { return 2 * slots.size(); }
};

using ExactLinearSystem = SparseSystem;

/// Holomorphic monomials of weighted degree `degree`, graded-lex sorted.
std::vector<Exponents> weighted_monomials(const VarSpace& space, int degree);

UnknownLayout make_layout(const QuadricModel& model, int weight, LayoutOrder order = LayoutOrder::canonical);

/// Coefficient rows of the tangency residual of the generic field of the given
/// weight. Each residual is conjugation-fixed, so one monomial of each
/// conjugate pair suffices (real and imaginary part rows).
ExactLinearSystem build_system(const QuadricModel& model, const UnknownLayout& layout);

struct BuiltSystem {
  UnknownLayout layout;
  ExactLinearSystem system;
};

BuiltSystem build_system(const QuadricModel& model, int weight, LayoutOrder order = LayoutOrder::canonical);

HoloVectorField field_from_vector(const UnknownLayout& layout, const RationalVector& v);

/// Coordinates of `field` in the layout; nullopt if the field has a term the
/// layout does not contain.
std::optional<RationalVector> vector_from_field(const UnknownLayout& layout, const HoloVectorField& field);

struct GradedComponentReport {
  int weight = 0;
  int real_dimension = 0;
  std::vector<HoloVectorField> basis;

  UnknownLayout layout;
  std::vector<RationalVector> kernel;  // reduced row-echelon, parallel to basis

  /// Whether `field` lies in the real span of the basis.
  bool contains(const HoloVectorField& field) const;
};

GradedComponentReport graded_component(const QuadricModel& model, int weight,
                                       LayoutOrder order = LayoutOrder::canonical);

/// Scans weights -2..max_weight for a nonzero element of hol(M,0) whose
/// coefficients have no terms of ordinary degree <= jet_order. Vanishing
/// conditions enter as unit rows of the linear system.
std::optional<HoloVectorField> jet_counterexample(const QuadricModel& model, int jet_order, int max_weight);

}  // namespace qcr
