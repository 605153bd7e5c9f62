#include "uniqlab/indicator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "uniqlab/errors.hpp"
#include "uniqlab/numerics.hpp"

namespace uniqlab::products {

namespace {

struct RayEstimate {
  double h = 0.0;
  double residual = 0.0;
  std::size_t overflow = 0;
};

RayEstimate estimate_ray(const FunctionHandle& f, double rho, double theta,
                         const std::vector<double>& radii) {
  // Non-finite samples are counted and skipped; the window is the outer quartile of what remains.
  std::vector<double> finite;
  RayEstimate est;
  const auto dir = std::polar(1.0, theta);
  for (double r : radii) {
    const double v = f.log_abs(r * dir) / std::pow(r, rho);
    if (std::isfinite(v)) {
      finite.push_back(v);
    } else {
      ++est.overflow;
    }
  }
  const std::size_t window = std::min(finite.size(), std::max<std::size_t>(1, (radii.size() + 3) / 4));
  const std::vector<double> values(finite.end() - static_cast<std::ptrdiff_t>(window), finite.end());
  if (values.empty()) {
    est.h = std::numeric_limits<double>::quiet_NaN();
    est.residual = std::numeric_limits<double>::quiet_NaN();
    return est;
  }
  est.h = median(values);
  for (double v : values) est.residual = std::max(est.residual, std::abs(v - est.h));
  return est;
}

}  // namespace

nlohmann::json IndicatorReport::to_json() const {
  nlohmann::json j;
  j["rho"] = rho;
  j["theta"] = theta_grid;
  j["h_estimate"] = h_estimates;
  j["residual"] = fit_residuals;
  j["overflow"] = overflow_counts;
  j["h_zero"] = h_zero;
  j["h_pi"] = h_pi;
  j["kappa"] = kappa;
  return j;
}

IndicatorReport indicator_estimate(const FunctionHandle& f, double rho,
                                   std::span<const double> theta_grid,
                                   std::span<const double> r_grid) {
  if (!(rho > 0.0)) throw PreconditionError("indicator order rho must be positive");
  if (r_grid.empty()) throw PreconditionError("indicator needs a non-empty radius grid");
  std::vector<double> radii(r_grid.begin(), r_grid.end());
  std::sort(radii.begin(), radii.end());
  if (!(radii.front() > 0.0)) throw PreconditionError("radii must be positive");

  IndicatorReport rep;
  rep.rho = rho;
  rep.theta_grid.assign(theta_grid.begin(), theta_grid.end());
  rep.h_estimates.resize(theta_grid.size());
  rep.fit_residuals.resize(theta_grid.size());
  rep.overflow_counts.resize(theta_grid.size());
  parallel_for(theta_grid.size(), [&](std::size_t i) {
    const auto est = estimate_ray(f, rho, theta_grid[i], radii);
    rep.h_estimates[i] = est.h;
    rep.fit_residuals[i] = est.residual;
    rep.overflow_counts[i] = est.overflow;
  });
  rep.h_zero = estimate_ray(f, rho, 0.0, radii).h;
  rep.h_pi = estimate_ray(f, rho, kPi, radii).h;
  rep.kappa = std::min(-rep.h_zero, -rep.h_pi) / (2.0 * kPi);
  return rep;
}

std::vector<double> kappa_estimate_bound_check(const IndicatorReport& report, double p, double q,
                                               double kappa_hat) {
  check_conjugate(p, q);
  if (!(kappa_hat > 0.0)) throw PreconditionError("kappa_hat must be positive");
  const double denom = p * std::pow(q * kappa_hat, p / q);
  std::vector<double> margins(report.theta_grid.size());
  for (std::size_t i = 0; i < margins.size(); ++i) {
    const double bound = 2.0 * kPi * std::pow(std::abs(std::sin(report.theta_grid[i])), p) / denom;
    margins[i] = bound - report.h_estimates[i];
  }
  return margins;
}

}  // namespace uniqlab::products
