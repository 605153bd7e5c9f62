#pragma once

#include "uniqlab/runner.hpp"

namespace uniqlab::cli {

/// Runs the command named in the config; provenance is filled by the caller.
ResultTable dispatch(const ExperimentConfig& config);

}  // namespace uniqlab::cli
