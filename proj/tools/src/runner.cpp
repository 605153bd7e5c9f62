#include "uniqlab/runner.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "commands.hpp"
#include "uniqlab/errors.hpp"
#include "uniqlab/io.hpp"

namespace uniqlab::cli {

namespace {

constexpr std::array<std::pair<Command, const char*>, 11> kCommands{{
    {Command::classify, "classify"},
    {Command::product, "product"},
    {Command::slope, "slope"},
    {Command::indicator, "indicator"},
    {Command::jensen, "jensen"},
    {Command::interpolate, "interpolate"},
    {Command::scan, "scan"},
    {Command::hardy, "hardy"},
    {Command::transfer, "transfer"},
    {Command::morgan, "morgan"},
    {Command::identities, "identities"},
}};

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string csv_field(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return io::format_double(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
      std::string out = "\"";
      for (char c : s) {
        if (c == '"') out += '"';
        out += c;
      }
      return out + '"';
    }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::json json_cell(const Cell& cell) {
  return std::visit([](const auto& v) { return nlohmann::json(v); }, cell);
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [cmd, text] : kCommands) {
    if (name == text) return cmd;
  }
  return std::nullopt;
}

std::string to_string(Command command) {
  for (const auto& [cmd, text] : kCommands) {
    if (cmd == command) return text;
  }
  return "unknown";
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& entry : kCommands) v.emplace_back(entry.second);
    return v;
  }();
  return names;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw PreconditionError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "command" && key != "params" && key != "seed" && key != "output_path") {
      throw PreconditionError("config: unknown key '" + key + "'");
    }
  }
  ExperimentConfig c;
  if (!j.contains("command") || !j["command"].is_string()) {
    throw PreconditionError("config: 'command' must be a string");
  }
  const auto cmd = parse_command(j["command"].get<std::string>());
  if (!cmd) throw PreconditionError("config: unknown command '" + j["command"].get<std::string>() + "'");
  c.command = *cmd;
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw PreconditionError("config: 'params' must be an object");
    c.params = j["params"];
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) {
      throw PreconditionError("config: 'seed' must be a non-negative integer");
    }
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("output_path")) {
    if (!j["output_path"].is_string()) throw PreconditionError("config: 'output_path' must be a string");
    c.output_path = j["output_path"].get<std::string>();
  }
  return c;
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j = {{"command", to_string(command)}, {"params", params}, {"seed", seed}};
  if (!output_path.empty()) j["output_path"] = output_path;
  return j;
}

std::string config_hash(const ExperimentConfig& config) {
  const nlohmann::json key = {
      {"command", to_string(config.command)}, {"params", config.params}, {"seed", config.seed}};
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key.dump())));
  return buf;
}

std::string version() { return UNIQLAB_VERSION; }

void ResultTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("row width does not match the column count");
  }
  rows.push_back(std::move(row));
}

ResultTable run(const ExperimentConfig& config) {
  ResultTable table = dispatch(config);
  table.provenance = {config_hash(config), version()};
  return table;
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return std::nullopt;
}

std::string render(const ResultTable& table, Format format) {
  if (format == Format::json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& cell : row) r.push_back(json_cell(cell));
      rows.push_back(std::move(r));
    }
    const nlohmann::json j = {
        {"columns", table.columns},
        {"rows", std::move(rows)},
        {"meta", table.meta},
        {"provenance",
         {{"config_hash", table.provenance.config_hash}, {"version", table.provenance.version}}},
    };
    return j.dump(2) + "\n";
  }
  std::string out = "# uniqlab " + table.provenance.version +
                    " config=" + table.provenance.config_hash + "\n";
  auto line = [&out](const auto& cells, auto&& fmt) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += fmt(cells[i]);
    }
    out += '\n';
  };
  line(table.columns, [](const std::string& s) { return csv_field(Cell{s}); });
  for (const auto& row : table.rows) line(row, [](const Cell& c) { return csv_field(c); });
  return out;
}

void emit(const ResultTable& table, const std::string& path, Format format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  const std::string text = render(table, format);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace uniqlab::cli
