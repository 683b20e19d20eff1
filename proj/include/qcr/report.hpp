#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qcr/io.hpp"

namespace qcr {

enum class Verdict { pass, fail, none };

std::string to_string(Verdict v);

struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::none;
  std::string detail;
  json witness;  // null when there is nothing to show
};

/// Outcome of one CLI command. The exit code depends on the verdicts only:
/// 0 when no check failed, 1 otherwise. Input errors never produce a report.
struct RunReport {
  std::string command;
  std::vector<CheckResult> checks;
  std::vector<std::string> info;
  json extra;  // command-specific payload, e.g. graded components

  int exit_code() const;
  /// First failing check, if any.
  std::optional<std::string> first_failure() const;
  json to_json() const;
  std::string to_text() const;
};

/// Offending monomials shown per residual component.
inline constexpr std::size_t kShownTerms = 5;

RunReport cmd_check(const QuadricModel& model, std::uint64_t budget = kDefaultTumanovBudget);
RunReport cmd_tangency(const QuadricModel& model, const HoloVectorField& field, const std::string& field_label);
RunReport cmd_solve(const QuadricModel& model, int weight_lo, int weight_hi);
RunReport cmd_jetdet(const QuadricModel& model, int jet_order, int max_weight);
/// End-to-end reproduction on `model` (the built-in one unless a test injects
/// another).
RunReport cmd_paper_demo(const QuadricModel& model, std::uint64_t budget = kDefaultTumanovBudget);

/// X(P), Y(P), Z(P), U(P) compared with (0,0,iQ,0,0), Q = P_1, P_2, P_4, P_5.
std::array<std::vector<Polynomial>, 4> form_actions(const QuadricModel& model);
/// The four quadratic identities combining the actions above; each entry is a
/// vector of d polynomials that should all vanish.
std::array<std::vector<Polynomial>, 4> action_identities(const QuadricModel& model);

}  // namespace qcr
