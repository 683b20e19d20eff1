#include "qcr/io.hpp"

#include <fstream>
#include <sstream>

namespace qcr {

namespace {

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

int positive_int(const json& j, const char* key, const std::string& where) {
  const json& v = member(j, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw ParseError(where + "." + key + ": expected a positive integer");
  return v.get<int>();
}

void expect_array(const json& j, std::size_t size, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  if (j.size() != size)
    throw ParseError(where + ": expected " + std::to_string(size) + " entries, found " + std::to_string(j.size()));
}

GaussianRational number(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": numbers are written as strings such as \"1/2-3i\"");
  try {
    return parse_gaussian(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace

json polynomial_to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exps", e}, {"coeff", serialize_gaussian(c)}});
  return out;
}

Polynomial polynomial_from_json(const json& j, const VarSpace& space, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": polynomial must be an array of terms");
  Polynomial p(space);
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string at = where + "[" + std::to_string(t) + "]";
    const json& exps = member(j[t], "exps", at);
    expect_array(exps, static_cast<std::size_t>(space.num_vars()), at + ".exps");
    Exponents e;
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (!exps[v].is_number_integer() || exps[v].get<long long>() < 0)
        throw ParseError(at + ".exps[" + std::to_string(v) + "]: expected a nonnegative integer");
      e.push_back(exps[v].get<int>());
    }
    p.add_term(e, number(member(j[t], "coeff", at), at + ".coeff"));
  }
  return p;
}

json model_to_json(const QuadricModel& model) {
  json forms = json::array();
  for (const auto& a : model.forms()) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(serialize_gaussian(a(i, j)));
      rows.push_back(std::move(row));
    }
    forms.push_back(std::move(rows));
  }
  return {{"n", model.n()}, {"d", model.d()}, {"forms", std::move(forms)}};
}

QuadricModel model_from_json(const json& j) {
  const int n = positive_int(j, "n", "model");
  const int d = positive_int(j, "d", "model");
  const json& forms = member(j, "forms", "model");
  expect_array(forms, static_cast<std::size_t>(d), "forms");
  std::vector<HermitianForm> mats;
  for (int k = 0; k < d; ++k) {
    const std::string at = "forms[" + std::to_string(k) + "]";
    expect_array(forms[static_cast<std::size_t>(k)], static_cast<std::size_t>(n), at);
    HermitianForm a(n, n);
    for (int i = 0; i < n; ++i) {
      const json& row = forms[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
      expect_array(row, static_cast<std::size_t>(n), at + "[" + std::to_string(i) + "]");
      for (int c = 0; c < n; ++c)
        a(i, c) = number(row[static_cast<std::size_t>(c)], at + "[" + std::to_string(i) + "][" + std::to_string(c) + "]");
    }
    mats.push_back(std::move(a));
  }
  return QuadricModel(n, std::move(mats));
}

json field_to_json(const HoloVectorField& field) {
  json f = json::array();
  json g = json::array();
  for (const auto& p : field.f()) f.push_back(polynomial_to_json(p));
  for (const auto& p : field.g()) g.push_back(polynomial_to_json(p));
  return {{"n", field.n()}, {"d", field.d()}, {"f", std::move(f)}, {"g", std::move(g)}};
}

HoloVectorField field_from_json(const json& j) {
  const int n = positive_int(j, "n", "field");
  const int d = positive_int(j, "d", "field");
  const VarSpace space = VarSpace::holomorphic(n, d);
  const json& f = member(j, "f", "field");
  const json& g = member(j, "g", "field");
  expect_array(f, static_cast<std::size_t>(n), "f");
  expect_array(g, static_cast<std::size_t>(d), "g");
  std::vector<Polynomial> fs;
  std::vector<Polynomial> gs;
  for (int i = 0; i < n; ++i)
    fs.push_back(polynomial_from_json(f[static_cast<std::size_t>(i)], space, "f[" + std::to_string(i) + "]"));
  for (int k = 0; k < d; ++k)
    gs.push_back(polynomial_from_json(g[static_cast<std::size_t>(k)], space, "g[" + std::to_string(k) + "]"));
  return HoloVectorField(space, std::move(fs), std::move(gs));
}

json component_to_json(const GradedComponentReport& report) {
  json basis = json::array();
  for (const auto& v : report.basis) basis.push_back(field_to_json(v));
  return {{"weight", report.weight}, {"dimension", report.real_dimension}, {"basis", std::move(basis)}};
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace qcr
