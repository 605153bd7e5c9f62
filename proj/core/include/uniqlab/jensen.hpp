#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "uniqlab/function_handle.hpp"
#include "uniqlab/zero_set.hpp"

namespace uniqlab::products {

struct JensenParams {
  double a = 1.0;
  double delta = 1.0;
  double phi = 0.7853981633974483;
  double counting_constant = 2.0;  // C_Gamma in |Gamma cap [u,v]| >= a(1+delta)(v-u) - C_Gamma
  double growth_constant = 10.0;   // C_F in |F(z)| <= C_F exp(a pi |Im z|) on the sector
  double fit_tolerance = 0.05;
};

struct JensenReport {
  double empirical_rate = 0.0;
  double bound = 0.0;  // -2 a delta sin(phi)
  bool pass = false;
  bool counting_ok = false;
  bool growth_ok = false;
  double worst_counting_slack = 0.0;  // min over windows of count - a(1+delta)(v-u) + C_Gamma
  double worst_growth_log = 0.0;      // max over sector grid of log|F| - a pi |Im z|
  std::vector<std::string> diagnostics;
};

/// Upper-envelope decay rate of F on the positive real axis against -2 a delta sin(phi).
/// x_grid should be dense relative to the zero spacing; points within 5% of the mean
/// gap from a zero are ignored.
JensenReport jensen_decay_check(const FunctionHandle& F, const ZeroSet& gamma,
                                const JensenParams& params, std::span<const double> x_grid);

/// Number of zeros in [x - t, x + t].
std::size_t zero_count_in_disk(const ZeroSet& gamma, double x, double t);

}  // namespace uniqlab::products
