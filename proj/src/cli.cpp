#include "qcr/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <regex>

#include "qcr/report.hpp"

namespace qcr::cli {

namespace {

constexpr const char* kBuiltinModel = "builtin";

QuadricModel load_model(const std::string& arg) {
  if (arg == kBuiltinModel) return paper_model();
  return model_from_json(load_json_file(arg));
}

std::pair<int, int> parse_weight_range(const std::string& text) {
  static const std::regex range(R"(^\s*(-?\d+)\s*(?:\.\.|:)\s*(-?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, range)) throw UsageError("--weights expects a range such as -2..4, got \"" + text + "\"");
  return {std::stoi(m[1]), std::stoi(m[2])};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of quadric CR models and their infinitesimal automorphisms"};
  app.require_subcommand(1);

  bool as_json = false;
  std::uint64_t budget = kDefaultTumanovBudget;
  app.add_flag("--json", as_json, "Print a machine-readable report");
  app.add_option("--budget", budget, "Maximum number of Tumanov grid points")->check(CLI::PositiveNumber);

  std::string model_arg;
  const std::string model_help = "Model JSON file, or \"builtin\" for the built-in model";

  auto* check = app.add_subcommand("check", "Structural checks of a quadric model");
  check->add_option("model", model_arg, model_help)->required();

  std::string field_arg;
  auto* tangency = app.add_subcommand("tangency", "Decide whether a holomorphic field is in hol(M,0)");
  tangency->add_option("model", model_arg, model_help)->required();
  tangency->add_option("field", field_arg, "Field JSON file or a built-in name (X Y Z U Y0 Y1 Z1 U1 T E)")->required();

  auto* solve = app.add_subcommand("solve", "Graded components of hol(M,0)");
  solve->add_option("model", model_arg, model_help)->required();
  int weight = 0;
  std::string weights;
  auto* weight_opt = solve->add_option("--weight", weight, "Single weight (>= -2)");
  auto* weights_opt = solve->add_option("--weights", weights, "Weight range lo..hi");
  weight_opt->excludes(weights_opt);
  weights_opt->excludes(weight_opt);

  auto* jetdet = app.add_subcommand("jetdet", "Search for a jet-determination counterexample");
  jetdet->add_option("model", model_arg, model_help)->required();
  int jet_order = 2;
  int max_weight = 4;
  jetdet->add_option("--jet-order", jet_order, "Jet order k (>= 0)")->required();
  jetdet->add_option("--max-weight", max_weight, "Largest weight searched (>= -2)")->required();

  auto* demo = app.add_subcommand("paper-demo", "Reproduce every statement about the built-in model");
  std::string demo_model;
  demo->add_option("--model", demo_model, "Run the demonstration against another model file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::string command = "qcr";
  try {
    RunReport report;
    if (*check) {
      command = "check";
      report = cmd_check(load_model(model_arg), budget);
    } else if (*tangency) {
      command = "tangency";
      const QuadricModel model = load_model(model_arg);
      const auto named = paper_fields();
      auto it = named.find(field_arg);
      const HoloVectorField field = it != named.end() ? it->second : field_from_json(load_json_file(field_arg));
      report = cmd_tangency(model, field, field_arg);
    } else if (*solve) {
      command = "solve";
      if (weight_opt->count() == 0 && weights_opt->count() == 0) throw UsageError("solve needs --weight or --weights");
      const auto [lo, hi] = weights_opt->count() ? parse_weight_range(weights) : std::pair{weight, weight};
      report = cmd_solve(load_model(model_arg), lo, hi);
    } else if (*jetdet) {
      command = "jetdet";
      report = cmd_jetdet(load_model(model_arg), jet_order, max_weight);
    } else if (*demo) {
      command = "paper-demo";
      report = cmd_paper_demo(demo_model.empty() ? paper_model() : load_model(demo_model), budget);
    }
    if (as_json) {
      out << report.to_json().dump(2) << "\n";
    } else {
      out << report.to_text();
    }
    return report.exit_code();
  } catch (const std::exception& e) {
    // ParseError, UsageError and ResourceError all mean the input cannot be
    // processed as given.
    if (as_json) {
      out << json{{"command", command}, {"error", e.what()}, {"exit_code", 2}}.dump(2) << "\n";
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qcr::cli
