#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "uniqlab/function_handle.hpp"

namespace uniqlab::products {

/// Phragmen-Lindeloef indicator estimates on a set of rays.
struct IndicatorReport {
  double rho = 1.0;
  std::vector<double> theta_grid;
  std::vector<double> h_estimates;
  std::vector<double> fit_residuals;  // max deviation inside the top-quartile window
  std::vector<std::size_t> overflow_counts;  // non-finite samples per ray
  double h_zero = 0.0;
  double h_pi = 0.0;
  double kappa = 0.0;  // (2 pi)^{-1} min(-h(0), -h(pi))

  nlohmann::json to_json() const;
};

/// h(theta) ~ median of log|f(r e^{i theta})| / r^rho over the outer quartile of the finite samples.
/// The rays theta = 0 and theta = pi are always sampled for kappa.
IndicatorReport indicator_estimate(const FunctionHandle& f, double rho,
                                   std::span<const double> theta_grid,
                                   std::span<const double> r_grid);

/// bound(theta) - h(theta) with bound = 2 pi |sin theta|^p / (p (q kappa_hat)^{p/q}).
std::vector<double> kappa_estimate_bound_check(const IndicatorReport& report, double p, double q,
                                               double kappa_hat);

}  // namespace uniqlab::products
