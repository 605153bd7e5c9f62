#pragma once

// Config-driven experiment runner behind the `uniqlab` executable.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace uniqlab::cli {

enum class Command {
  classify,
  product,
  slope,
  indicator,
  jensen,
  interpolate,
  scan,
  hardy,
  transfer,
  morgan,
  identities,
};

std::optional<Command> parse_command(std::string_view name);
std::string to_string(Command command);
const std::vector<std::string>& command_names();

struct ExperimentConfig {
  Command command = Command::morgan;
  nlohmann::json params = nlohmann::json::object();
  std::string output_path;
  std::uint64_t seed = 0;

  /// {"command": ..., "params": {...}, "seed": ..., "output_path": ...}
  static ExperimentConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// 16 hex digits of FNV-1a over the sorted-key JSON dump of the config (output path excluded).
std::string config_hash(const ExperimentConfig& config);

std::string version();

using Cell = std::variant<std::int64_t, double, std::string, bool>;

struct Provenance {
  std::string config_hash;
  std::string version;
};

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::json meta = nlohmann::json::object();  // scalar diagnostics, JSON output only
  Provenance provenance;

  void add_row(std::vector<Cell> row);
};

/// Validates params, dispatches, and stamps provenance. Does not write files.
ResultTable run(const ExperimentConfig& config);

enum class Format { csv, json };

std::optional<Format> parse_format(std::string_view name);

/// CSV: "# uniqlab <version> config=<hash>" line, header, rows; LF endings, shortest
/// round-trip floats. JSON: sorted keys with a "provenance" object.
std::string render(const ResultTable& table, Format format);

/// Writes render(table, format) to path; throws std::runtime_error naming the path.
void emit(const ResultTable& table, const std::string& path, Format format);

}  // namespace uniqlab::cli
