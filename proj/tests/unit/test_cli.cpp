#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "uniqlab/errors.hpp"
#include "uniqlab/runner.hpp"

using namespace uniqlab::cli;
using nlohmann::json;

namespace {

ExperimentConfig config(Command c, json params, std::uint64_t seed = 0) {
  ExperimentConfig cfg;
  cfg.command = c;
  cfg.params = std::move(params);
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("command names") {
  CHECK(command_names().size() == 11);
  for (const auto& name : command_names()) {
    const auto c = parse_command(name);
    REQUIRE(c.has_value());
    CHECK(to_string(*c) == name);
  }
  CHECK_FALSE(parse_command("bogus").has_value());
  CHECK(parse_format("csv") == Format::csv);
  CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("config parsing") {
  const auto cfg = ExperimentConfig::from_json(
      json::parse(R"({"command":"morgan","params":{"p":3},"seed":7,"output_path":"x.csv"})"));
  CHECK(cfg.command == Command::morgan);
  CHECK(cfg.seed == 7);
  CHECK(cfg.output_path == "x.csv");
  CHECK(ExperimentConfig::from_json(cfg.to_json()).to_json() == cfg.to_json());
  CHECK_THROWS_AS(ExperimentConfig::from_json(json::parse(R"({"command":"morgan","extra":1})")),
                  uniqlab::PreconditionError);
  CHECK_THROWS_AS(ExperimentConfig::from_json(json::parse(R"({"command":"nope"})")),
                  uniqlab::PreconditionError);
}

TEST_CASE("config hash") {
  const auto a = config(Command::morgan, {{"p", 2.0}});
  auto b = a;
  b.output_path = "elsewhere.csv";
  CHECK(config_hash(a).size() == 16);
  CHECK(config_hash(a) == config_hash(b));
  CHECK(config_hash(a) != config_hash(config(Command::morgan, {{"p", 2.0}}, 1)));
  CHECK(config_hash(a) != config_hash(config(Command::morgan, {{"p", 3.0}})));
}

TEST_CASE("morgan row") {
  const auto t = run(config(Command::morgan, {{"p", 2.0}}));
  REQUIRE(t.rows.size() == 1);
  CHECK(std::get<double>(t.rows[0][0]) == 2.0);
  CHECK(std::get<double>(t.rows[0][1]) == 2.0);
  CHECK(std::get<double>(t.rows[0][2]) == 2.0);
  CHECK(std::get<double>(t.rows[0][3]) == doctest::Approx(1.0));
  const auto csv = render(t, Format::csv);
  CHECK(csv.find("\np,q,r,threshold\n2,2,2,1\n") != std::string::npos);
  CHECK(csv.rfind("# uniqlab " + version() + " config=" + t.provenance.config_hash + "\n", 0) == 0);
}

TEST_CASE("classify verdict") {
  const auto t = run(config(Command::classify, {{"p", 2.0}, {"alpha", 0.4}, {"beta", 0.4}}));
  REQUIRE(t.rows.size() == 1);
  CHECK(std::get<std::string>(t.rows[0][0]) == "supercritical");
  const auto sub = run(config(Command::classify, {{"p", 2.0}, {"alpha", 0.6}, {"beta", 0.6}}));
  CHECK(std::get<std::string>(sub.rows[0][0]) == "subcritical");
}

TEST_CASE("rendering") {
  ResultTable t;
  t.columns = {"x", "label"};
  t.provenance = {"0123456789abcdef", "9.9.9"};
  CHECK(render(t, Format::csv) == "# uniqlab 9.9.9 config=0123456789abcdef\nx,label\n");
  t.add_row({0.5, std::string("a,b")});
  t.add_row({std::int64_t{3}, true});
  CHECK(render(t, Format::csv) ==
        "# uniqlab 9.9.9 config=0123456789abcdef\nx,label\n0.5,\"a,b\"\n3,true\n");
  CHECK_THROWS(t.add_row({1.0}));
  const auto j = json::parse(render(t, Format::json));
  CHECK(j["provenance"]["config_hash"] == "0123456789abcdef");
  CHECK(j["provenance"]["version"] == "9.9.9");
  CHECK(j["columns"].size() == 2);
  CHECK(j["rows"][0][0] == 0.5);
}

TEST_CASE("determinism") {
  const auto cfg = config(Command::product, {{"random_points", 20}}, 11);
  CHECK(render(run(cfg), Format::csv) == render(run(cfg), Format::csv));
  CHECK(render(run(cfg), Format::json) == render(run(cfg), Format::json));
  CHECK(render(run(cfg), Format::csv) !=
        render(run(config(Command::product, {{"random_points", 20}}, 12)), Format::csv));
}

TEST_CASE("emit writes the rendered bytes") {
  const auto t = run(config(Command::morgan, {{"p", 3.0}}));
  const std::string path = "test_cli_emit.csv";
  emit(t, path, Format::csv);
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == render(t, Format::csv));
  std::remove(path.c_str());
  CHECK_THROWS_AS(emit(t, "no/such/dir/out.csv", Format::csv), std::runtime_error);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(run(config(Command::morgan, {{"p", 2.0}, {"typo", 1}})), uniqlab::PreconditionError);
  CHECK_THROWS_AS(run(config(Command::morgan, {{"p", 1.0}})), uniqlab::PreconditionError);
  CHECK_THROWS_AS(run(config(Command::morgan, json::object())), uniqlab::PreconditionError);
  CHECK_THROWS_AS(run(config(Command::morgan, {{"p", "two"}})), uniqlab::PreconditionError);
  CHECK_THROWS_AS(run(config(Command::classify, {{"p", 2.0}, {"alpha", -1.0}, {"beta", 0.4}})),
                  uniqlab::PreconditionError);
  CHECK_THROWS_AS(run(config(Command::scan, {{"N", -3}})), uniqlab::PreconditionError);
}
