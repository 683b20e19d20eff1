#include "qcr/report.hpp"

#include <sstream>

namespace qcr {

namespace {

bool all_zero(const std::vector<Polynomial>& ps) {
  return std::all_of(ps.begin(), ps.end(), [](const Polynomial& p) { return p.is_zero(); });
}

json polys_to_json(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(polynomial_to_json(p));
  return out;
}

/// First few terms of p, as text.
std::string leading_terms(const Polynomial& p, std::size_t count) {
  Polynomial head(p.space());
  std::size_t shown = 0;
  for (const auto& [e, c] : p.terms()) {
    if (shown++ == count) break;
    head.add_term(e, c);
  }
  std::string s = head.to_string();
  if (p.size() > count) s += " + ... (" + std::to_string(p.size()) + " terms)";
  return s;
}

bool is_builtin_model(const QuadricModel& model) { return model_to_json(model) == model_to_json(paper_model()); }

std::string relation_text(const QuadraticRelation& r, int d) {
  const auto pairs = quadratic_pairs(d);
  std::ostringstream os;
  bool first = true;
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    const Rational& q = r.coefficients[c];
    if (sgn(q) == 0) continue;
    const Rational a = abs(q);
    if (!first || sgn(q) < 0) os << (sgn(q) < 0 ? (first ? "-" : " - ") : " + ");
    first = false;
    if (a != 1) os << to_string(a) << "*";
    const auto [i, j] = pairs[c];
    if (i == j) {
      os << "P" << i + 1 << "^2";
    } else {
      os << "P" << i + 1 << "*P" << j + 1;
    }
  }
  os << " = 0";
  return os.str();
}

json relation_json(const QuadraticRelation& r, int d) {
  const auto pairs = quadratic_pairs(d);
  json coeffs = json::object();
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    if (sgn(r.coefficients[c]) == 0) continue;
    coeffs["P" + std::to_string(pairs[c].first + 1) + "*P" + std::to_string(pairs[c].second + 1)] =
        to_string(r.coefficients[c]);
  }
  return coeffs;
}

std::string bound_line(const QuadricModel& model) {
  return "published bound: k = 1 + d = " + std::to_string(1 + model.d());
}

json int_vector(const std::vector<int>& v) { return json(v); }

/// Runs `body`, turning library exceptions into a failed check.
template <typename Body>
CheckResult guarded(const std::string& name, Body&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, Verdict::fail, std::string("error: ") + e.what(), nullptr};
  }
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::none: return "none";
  }
  return "none";
}

int RunReport::exit_code() const { return first_failure() ? 1 : 0; }

std::optional<std::string> RunReport::first_failure() const {
  for (const auto& c : checks)
    if (c.verdict == Verdict::fail) return c.name;
  return std::nullopt;
}

json RunReport::to_json() const {
  json checks_json = json::array();
  for (const auto& c : checks) {
    json item = {{"name", c.name}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}};
    if (!c.witness.is_null()) item["witness"] = c.witness;
    checks_json.push_back(std::move(item));
  }
  json out = {{"command", command}, {"checks", std::move(checks_json)}, {"info", info}, {"exit_code", exit_code()}};
  if (!extra.is_null()) out["result"] = extra;
  return out;
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << command << "\n";
  for (const auto& c : checks) {
    const char* tag = c.verdict == Verdict::pass ? "PASS" : c.verdict == Verdict::fail ? "FAIL" : "INFO";
    os << "[" << tag << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  for (const auto& line : info) os << line << "\n";
  return os.str();
}

RunReport cmd_check(const QuadricModel& model, std::uint64_t budget) {
  RunReport r;
  r.command = "check (n=" + std::to_string(model.n()) + ", d=" + std::to_string(model.d()) + ")";

  const auto indep = forms_linearly_independent(model);
  r.checks.push_back({"forms_linearly_independent", indep.independent ? Verdict::pass : Verdict::fail,
                      "rank " + std::to_string(indep.rank) + " of " + std::to_string(model.d()),
                      {{"rank", indep.rank}}});

  const bool levi = levi_nondegenerate(model);
  r.checks.push_back({"levi_nondegenerate", levi ? Verdict::pass : Verdict::fail,
                      levi ? "forms have no common kernel vector" : "forms share a kernel vector", nullptr});

  const bool ft2 = finite_type_two(model);
  r.checks.push_back({"finite_type_two", ft2 ? Verdict::pass : Verdict::fail,
                      ft2 ? "Levi generating (forms independent)" : "forms are linearly dependent", nullptr});

  const auto c = tumanov_witness(model, budget);
  if (c) {
    const GaussianRational det = exact_determinant(combination(model, *c));
    std::ostringstream os;
    os << "det(sum c_j A_j) = " << det << " at c = (";
    for (std::size_t k = 0; k < c->size(); ++k) os << (k ? "," : "") << (*c)[k];
    os << ")";
    r.checks.push_back(
        {"tumanov_witness", Verdict::pass, os.str(), {{"c", int_vector(*c)}, {"determinant", serialize_gaussian(det)}}});
  } else {
    r.checks.push_back({"tumanov_witness", Verdict::fail,
                        "det(sum c_j A_j) vanishes on the whole grid {0.." + std::to_string(model.n()) + "}^" +
                            std::to_string(model.d()),
                        nullptr});
  }

  const auto syz = quadratic_syzygies(model);
  bool all_vanish = true;
  json rels = json::array();
  std::string text;
  for (const auto& rel : syz) {
    all_vanish = all_vanish && expand_relation(model, rel).is_zero();
    rels.push_back(relation_json(rel, model.d()));
    text += (text.empty() ? "" : "; ") + relation_text(rel, model.d());
  }
  r.checks.push_back({"quadratic_syzygies", all_vanish ? Verdict::pass : Verdict::fail,
                      syz.empty() ? "no quadratic relations" : std::to_string(syz.size()) + " relation(s): " + text,
                      {{"relations", rels}}});
  return r;
}

RunReport cmd_tangency(const QuadricModel& model, const HoloVectorField& field, const std::string& field_label) {
  RunReport r;
  r.command = "tangency " + field_label;
  const auto residual = tangency_residual(field, model);
  const bool tangent = all_zero(residual);
  r.checks.push_back({"tangency", tangent ? Verdict::pass : Verdict::fail,
                      tangent ? field_label + " is in hol(M,0)" : field_label + " is not tangent to M",
                      {{"residual", polys_to_json(residual)}}});
  for (std::size_t k = 0; k < residual.size(); ++k) {
    const std::string line = "R" + std::to_string(k + 1) + " = " + leading_terms(residual[k], kShownTerms);
    r.info.push_back(line);
  }
  return r;
}

RunReport cmd_solve(const QuadricModel& model, int weight_lo, int weight_hi) {
  if (weight_lo < -2 || weight_hi < weight_lo) throw UsageError("weights must satisfy -2 <= lo <= hi");
  RunReport r;
  r.command = "solve weights " + std::to_string(weight_lo) + ".." + std::to_string(weight_hi);
  const bool builtin = is_builtin_model(model);
  const auto named = builtin ? paper_fields() : std::map<std::string, HoloVectorField>{};

  json components = json::array();
  for (int mu = weight_lo; mu <= weight_hi; ++mu) {
    const auto comp = graded_component(model, mu);
    r.checks.push_back({"weight " + std::to_string(mu), Verdict::none,
                        "dimension " + std::to_string(comp.real_dimension), nullptr});
    for (std::size_t b = 0; b < comp.basis.size(); ++b)
      r.info.push_back("  mu=" + std::to_string(mu) + " basis[" + std::to_string(b) + "] = " + comp.basis[b].to_string());
    for (const auto& [name, field] : named) {
      const auto pieces = weighted_decomposition(field);
      if (pieces.size() != 1 || pieces.begin()->first != mu) continue;
      const bool in = comp.contains(field);
      r.checks.push_back({"contains " + name + " (weight " + std::to_string(mu) + ")",
                          in ? Verdict::pass : Verdict::fail, in ? "in span" : "not in span", nullptr});
    }
    components.push_back(component_to_json(comp));
  }
  r.extra = {{"components", std::move(components)}};
  return r;
}

RunReport cmd_jetdet(const QuadricModel& model, int jet_order, int max_weight) {
  if (jet_order < 0) throw UsageError("jet order must be >= 0");
  if (max_weight < -2) throw UsageError("max weight must be >= -2");
  RunReport r;
  r.command = "jetdet k=" + std::to_string(jet_order) + " W=" + std::to_string(max_weight);
  const auto witness = jet_counterexample(model, jet_order, max_weight);
  if (witness) {
    const int order = *field_vanishing_order(*witness);
    const int weight = weighted_decomposition(*witness).begin()->first;
    const bool valid = is_infinitesimal_automorphism(*witness, model) && order > jet_order;
    r.checks.push_back({"jet_counterexample", valid ? Verdict::pass : Verdict::fail,
                        "nonzero field in hol(M,0) of weight " + std::to_string(weight) + " vanishing to order " +
                            std::to_string(order) + ": " + std::to_string(jet_order) + "-jet determination fails",
                        {{"field", field_to_json(*witness)}, {"vanishing_order", order}, {"weight", weight}}});
    r.info.push_back("witness: " + witness->to_string());
  } else {
    r.checks.push_back({"jet_counterexample", Verdict::fail,
                        "no counterexample up to weight " + std::to_string(max_weight), nullptr});
  }
  r.info.push_back(bound_line(model));
  return r;
}

std::array<std::vector<Polynomial>, 4> form_actions(const QuadricModel& model) {
  const auto fields = paper_fields();
  const TangencyEvaluator eval(model);
  return {eval.apply_to_forms(fields.at("X")), eval.apply_to_forms(fields.at("Y")),
          eval.apply_to_forms(fields.at("Z")), eval.apply_to_forms(fields.at("U"))};
}

std::array<std::vector<Polynomial>, 4> action_identities(const QuadricModel& model) {
  const auto [xp, yp, zp, up] = form_actions(model);
  const auto& p = model.form_polynomials();
  const GaussianRational two(2);
  const GaussianRational minus_two(-2);
  std::array<std::vector<Polynomial>, 4> out;
  for (std::size_t k = 0; k < xp.size(); ++k) {
    out[0].push_back(p[0] * (-yp[k]) + p[1] * xp[k]);
    out[1].push_back(p[0] * xp[k] + p[1] * yp[k] + p[4] * (minus_two * zp[k]) + p[3] * (minus_two * up[k]));
    out[2].push_back(p[1] * (minus_two * zp[k]) + p[3] * (two * yp[k]));
    out[3].push_back(p[1] * (minus_two * up[k]) + p[4] * (two * yp[k]));
  }
  return out;
}

RunReport cmd_paper_demo(const QuadricModel& model, std::uint64_t budget) {
  RunReport r;
  r.command = "paper-demo";
  const GaussianRational i = GaussianRational::i();

  r.checks.push_back(guarded("model validation", [&]() -> CheckResult {
    const bool ok = model.n() == 4 && model.d() == 5;
    return {"model validation", ok ? Verdict::pass : Verdict::fail,
            "Hermitian forms, n=" + std::to_string(model.n()) + ", d=" + std::to_string(model.d()), nullptr};
  }));

  r.checks.push_back(guarded("forms linearly independent", [&]() -> CheckResult {
    const auto res = forms_linearly_independent(model);
    return {"forms linearly independent", res.independent ? Verdict::pass : Verdict::fail,
            "rank " + std::to_string(res.rank), {{"rank", res.rank}}};
  }));

  r.checks.push_back(guarded("Tumanov condition", [&]() -> CheckResult {
    const auto c = tumanov_witness(model, budget);
    if (!c) return {"Tumanov condition", Verdict::fail, "no witness on the grid", nullptr};
    const GaussianRational det = exact_determinant(combination(model, *c));
    return {"Tumanov condition", Verdict::pass, "det = " + serialize_gaussian(det),
            {{"c", int_vector(*c)}, {"determinant", serialize_gaussian(det)}}};
  }));

  r.checks.push_back(guarded("Levi generating, Levi non-degenerate", [&]() -> CheckResult {
    const bool ft2 = finite_type_two(model);
    const bool levi = levi_nondegenerate(model);
    return {"Levi generating, Levi non-degenerate", ft2 && levi ? Verdict::pass : Verdict::fail,
            std::string("finite type 2: ") + (ft2 ? "yes" : "no") + ", Levi non-degenerate: " + (levi ? "yes" : "no"),
            nullptr};
  }));

  r.checks.push_back(guarded("relation P1^2 + P2^2 - 4 P4 P5 = 0", [&]() -> CheckResult {
    const auto syz = quadratic_syzygies(model);
    QuadraticRelation target{std::vector<Rational>(quadratic_pairs(model.d()).size(), Rational(0))};
    const auto pairs = quadratic_pairs(model.d());
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      if (pairs[c] == std::pair{0, 0} || pairs[c] == std::pair{1, 1}) target.coefficients[c] = 1;
      if (pairs[c] == std::pair{3, 4}) target.coefficients[c] = -4;
    }
    std::vector<RationalVector> basis;
    for (const auto& rel : syz) basis.push_back(rel.coefficients);
    const bool found = in_span(basis, target.coefficients) && expand_relation(model, target).is_zero();
    return {"relation P1^2 + P2^2 - 4 P4 P5 = 0", found ? Verdict::pass : Verdict::fail,
            std::to_string(syz.size()) + " quadratic relation(s) found", nullptr};
  }));

  r.checks.push_back(guarded("X, Y, Z, U act on the forms", [&]() -> CheckResult {
    const auto actions = form_actions(model);
    const std::array<int, 4> q{0, 1, 3, 4};
    bool ok = true;
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t k = 0; k < actions[a].size(); ++k) {
        const Polynomial expected =
            k == 2 ? i * model.form_polynomials()[static_cast<std::size_t>(q[a])] : Polynomial(model.real_space());
        ok = ok && actions[a][k] == expected;
      }
    }
    return {"X, Y, Z, U act on the forms", ok ? Verdict::pass : Verdict::fail,
            "(0,0,iP1,0,0), (0,0,iP2,0,0), (0,0,iP4,0,0), (0,0,iP5,0,0)", nullptr};
  }));

  r.checks.push_back(guarded("quadratic identities among X(P), Y(P), Z(P), U(P)", [&]() -> CheckResult {
    const auto ids = action_identities(model);
    bool ok = true;
    for (const auto& id : ids) ok = ok && all_zero(id);
    return {"quadratic identities among X(P), Y(P), Z(P), U(P)", ok ? Verdict::pass : Verdict::fail, "four quadratic identities", nullptr};
  }));

  r.checks.push_back(guarded("T is in hol(M,0)", [&]() -> CheckResult {
    const auto t = paper_fields().at("T");
    const bool tangent = all_zero(tangency_residual(t, model));
    const auto order = field_vanishing_order(t);
    const bool ok = tangent && order == 3;
    return {"T is in hol(M,0)", ok ? Verdict::pass : Verdict::fail,
            std::string("residual ") + (tangent ? "zero" : "nonzero") + ", vanishing order " +
                (order ? std::to_string(*order) : "inf"),
            nullptr};
  }));

  constexpr int kJet = 2;
  constexpr int kMaxWeight = 4;
  r.checks.push_back(guarded("2-jet determination fails", [&]() -> CheckResult {
    const auto witness = jet_counterexample(model, kJet, kMaxWeight);
    if (!witness)
      return {"2-jet determination fails", Verdict::fail, "no counterexample up to weight 4", nullptr};
    const int order = *field_vanishing_order(*witness);
    const bool ok = is_infinitesimal_automorphism(*witness, model) && order > kJet;
    return {"2-jet determination fails", ok ? Verdict::pass : Verdict::fail,
            "witness of weight " + std::to_string(weighted_decomposition(*witness).begin()->first) +
                " vanishing to order " + std::to_string(order),
            {{"field", field_to_json(*witness)}, {"vanishing_order", order}}};
  }));

  r.checks.push_back(guarded("published jet bound", [&]() -> CheckResult {
    const int bound = 1 + model.d();
    return {"published jet bound", kJet < bound ? Verdict::pass : Verdict::fail,
            "counterexample jet order " + std::to_string(kJet) + " is below k = 1 + d = " + std::to_string(bound),
            {{"k", bound}}};
  }));

  r.info.push_back(bound_line(model));
  if (const auto fail = r.first_failure()) r.info.push_back("first failing step: " + *fail);
  return r;
}

}  // namespace qcr
