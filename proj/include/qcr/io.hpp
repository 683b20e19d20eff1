#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qcr/autsolver.hpp"
#include "qcr/quadric.hpp"
#include "qcr/vectorfield.hpp"

namespace qcr {

using json = nlohmann::json;

/// [{"exps": [...], "coeff": "<gaussian>"}, ...] in graded-lex order.
json polynomial_to_json(const Polynomial& p);
/// `where` prefixes diagnostics, e.g. "f[2]".
Polynomial polynomial_from_json(const json& j, const VarSpace& space, const std::string& where);

/// {"n": n, "d": d, "forms": [d matrices of n rows of n strings]}.
json model_to_json(const QuadricModel& model);
QuadricModel model_from_json(const json& j);

/// {"n": n, "d": d, "f": [n polynomials], "g": [d polynomials]}.
json field_to_json(const HoloVectorField& field);
HoloVectorField field_from_json(const json& j);

/// {"weight": mu, "dimension": k, "basis": [fields]}.
json component_to_json(const GradedComponentReport& report);

/// Reads and parses a JSON file; ParseError carries the file name and the
/// parser's line/column.
json load_json_file(const std::filesystem::path& path);

}  // namespace qcr
