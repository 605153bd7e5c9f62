// uniqlab: run one experiment from a JSON config or subcommand flags and emit a table.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "uniqlab/errors.hpp"
#include "uniqlab/runner.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitComputation = 3;

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw uniqlab::PreconditionError("cannot read config '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw uniqlab::PreconditionError("config '" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace uniqlab::cli;

  CLI::App app{"Numerical experiments on Fourier uniqueness pairs and decay transfer"};
  app.set_version_flag("--version", version());
  std::string config_path;
  std::string out_path;
  std::string format_name;
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config_path, "JSON config {command, params, seed, output_path}")
      ->check(CLI::ExistingFile);
  app.add_option("--out", out_path, "output file (default: stdout)");
  app.add_option("--format", format_name, "csv or json (default: from --out extension, else csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", seed, "seed for randomized grids");

  app.fallthrough();  // inherited by subcommands: global flags may follow them
  std::map<std::string, std::string> params_text;
  for (const auto& name : command_names()) {
    auto* sub = app.add_subcommand(name, "run the " + name + " experiment");
    sub->add_option("--params", params_text[name], "params as a JSON object");
  }
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    ExperimentConfig config;
    bool have_command = false;
    if (!config_path.empty()) {
      config = ExperimentConfig::from_json(read_json_file(config_path));
      have_command = true;
    }
    if (!app.get_subcommands().empty()) {
      const std::string name = app.get_subcommands().front()->get_name();
      if (have_command && to_string(config.command) != name) config.params = nlohmann::json::object();
      config.command = *parse_command(name);
      have_command = true;
      const std::string& text = params_text[name];
      if (!text.empty()) {
        nlohmann::json overrides;
        try {
          overrides = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
          throw uniqlab::PreconditionError(std::string("--params is not valid JSON: ") + e.what());
        }
        if (!overrides.is_object()) throw uniqlab::PreconditionError("--params must be a JSON object");
        config.params.update(overrides);
      }
    }
    if (!have_command) throw uniqlab::PreconditionError("no command: pass --config or a subcommand");
    if (seed) config.seed = *seed;
    if (!out_path.empty()) config.output_path = out_path;

    Format format = Format::csv;
    if (!format_name.empty()) {
      format = *parse_format(format_name);
    } else if (config.output_path.size() >= 5 &&
               config.output_path.compare(config.output_path.size() - 5, 5, ".json") == 0) {
      format = Format::json;
    }

    const ResultTable table = run(config);
    if (config.output_path.empty()) {
      std::cout << render(table, format);
    } else {
      emit(table, config.output_path, format);
    }
    return EXIT_SUCCESS;
  } catch (const uniqlab::PreconditionError& e) {
    std::cerr << "uniqlab: invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "uniqlab: invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "uniqlab: error: " << e.what() << '\n';
    return kExitComputation;
  }
}
