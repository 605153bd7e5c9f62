#pragma once

// Text serialization shared by the library and the command-line runner.

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "uniqlab/pairs.hpp"

namespace uniqlab::io {

/// Shortest decimal that round-trips to the same double ("0.5", "1e-10", "nan", "-inf").
std::string format_double(double value);

/// "j,lambda_j" header, one LF-terminated row per point.
std::string sequence_to_csv(const pairs::SampleSequence& seq);
pairs::SampleSequence sequence_from_csv(std::string_view text,
                                        pairs::Side side = pairs::Side::two_sided);

/// {"kind":"power_lattice","p":..,"alpha":..,"j_max":..,"shift":..}
nlohmann::json generator_to_json(const pairs::LatticeGenerator& gen);
pairs::LatticeGenerator generator_from_json(const nlohmann::json& j);

}  // namespace uniqlab::io
