#include "uniqlab/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "uniqlab/errors.hpp"

namespace uniqlab::io {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return {buf.data(), res.ptr};
}

std::string sequence_to_csv(const pairs::SampleSequence& seq) {
  std::string out = "j,lambda_j\n";
  const auto pts = seq.points();
  const auto idx = seq.indices();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out += std::to_string(idx[i]);
    out += ',';
    out += format_double(pts[i]);
    out += '\n';
  }
  return out;
}

pairs::SampleSequence sequence_from_csv(std::string_view text, pairs::Side side) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "j,lambda_j") {
    throw PreconditionError("sequence CSV must start with the header j,lambda_j");
  }
  std::vector<double> points;
  std::vector<long> indices;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw PreconditionError("malformed sequence row: " + line);
    long j = 0;
    double v = 0.0;
    const char* b = line.data();
    const auto r1 = std::from_chars(b, b + comma, j);
    const auto r2 = std::from_chars(b + comma + 1, b + line.size(), v);
    if (r1.ec != std::errc{} || r2.ec != std::errc{} || r2.ptr != b + line.size()) {
      throw PreconditionError("malformed sequence row: " + line);
    }
    indices.push_back(j);
    points.push_back(v);
  }
  return pairs::SampleSequence(std::move(points), side, std::nullopt, std::move(indices));
}

nlohmann::json generator_to_json(const pairs::LatticeGenerator& gen) {
  return {{"kind", "power_lattice"},
          {"p", gen.p},
          {"alpha", gen.alpha},
          {"j_max", gen.j_max},
          {"shift", gen.shift}};
}

pairs::LatticeGenerator generator_from_json(const nlohmann::json& j) {
  if (j.value("kind", "") != "power_lattice") {
    throw PreconditionError("unknown generator kind");
  }
  pairs::LatticeGenerator g;
  g.p = j.at("p").get<double>();
  g.alpha = j.at("alpha").get<double>();
  g.j_max = j.at("j_max").get<std::size_t>();
  g.shift = j.value("shift", 0.0);
  return g;
}

}  // namespace uniqlab::io
