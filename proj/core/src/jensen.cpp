#include "uniqlab/jensen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "uniqlab/errors.hpp"
#include "uniqlab/numerics.hpp"

namespace uniqlab::products {

namespace {

double distance_to_zero(const ZeroSet& gamma, double x) {
  const auto g = gamma.gammas();
  const auto it = std::lower_bound(g.begin(), g.end(), x);
  double d = std::numeric_limits<double>::infinity();
  if (it != g.end()) d = std::min(d, *it - x);
  if (it != g.begin()) d = std::min(d, x - *std::prev(it));
  return d;
}

}  // namespace

std::size_t zero_count_in_disk(const ZeroSet& gamma, double x, double t) {
  if (!(t > 0.0)) throw PreconditionError("disk radius must be positive");
  return gamma.count_in(x - t, x + t);
}

JensenReport jensen_decay_check(const FunctionHandle& F, const ZeroSet& gamma,
                                const JensenParams& params, std::span<const double> x_grid) {
  if (!(params.phi > 0.0 && params.phi < kPi / 2.0)) {
    throw PreconditionError("sector half-angle must lie in (0, pi/2)");
  }
  if (!(params.a > 0.0) || !(params.delta >= 0.0)) {
    throw PreconditionError("need a > 0 and delta >= 0");
  }
  std::vector<double> xs(x_grid.begin(), x_grid.end());
  std::sort(xs.begin(), xs.end());
  if (xs.size() < 16 || !(xs.front() > 0.0)) {
    throw PreconditionError("x grid must contain at least 16 positive points");
  }

  JensenReport rep;
  rep.bound = -2.0 * params.a * params.delta * std::sin(params.phi);
  const double x_max = xs.back();
  const double g_max = gamma.gammas().back();

  // Counting hypothesis on windows [u, v] inside the stored zeros.
  const double rate = params.a * (1.0 + params.delta);
  rep.worst_counting_slack = std::numeric_limits<double>::infinity();
  const double span_top = std::min(x_max, g_max);
  for (double u = 0.0; u < span_top; u += span_top / 64.0) {
    for (double len = 0.25; u + len <= span_top; len *= 2.0) {
      const double count = static_cast<double>(gamma.count_in(u, u + len));
      rep.worst_counting_slack =
          std::min(rep.worst_counting_slack, count - rate * len + params.counting_constant);
    }
  }
  rep.counting_ok = rep.worst_counting_slack >= 0.0;
  if (!rep.counting_ok) {
    std::ostringstream os;
    os << "counting hypothesis violated: slack " << rep.worst_counting_slack;
    rep.diagnostics.push_back(os.str());
  }

  // Growth hypothesis on a polar grid covering the closed sector.
  rep.worst_growth_log = -std::numeric_limits<double>::infinity();
  constexpr int kAngles = 17;
  constexpr int kRadii = 48;
  for (int i = 0; i < kRadii; ++i) {
    const double r = 1.0 + (x_max - 1.0) * i / (kRadii - 1);
    for (int k = 0; k < kAngles; ++k) {
      const double ang = -params.phi + 2.0 * params.phi * k / (kAngles - 1);
      const auto z = std::polar(r, ang);
      const double v = F.log_abs(z) - params.a * kPi * std::abs(z.imag());
      if (std::isfinite(v)) rep.worst_growth_log = std::max(rep.worst_growth_log, v);
    }
  }
  rep.growth_ok = rep.worst_growth_log <= std::log(params.growth_constant);
  if (!rep.growth_ok) {
    std::ostringstream os;
    os << "growth hypothesis violated: max log|F| - a pi |Im z| = " << rep.worst_growth_log;
    rep.diagnostics.push_back(os.str());
  }

  // Upper envelope over the outer half of the grid, one bucket per mean zero gap.
  const double x_lo = 0.5 * (xs.front() + x_max);
  const std::size_t zeros_in = gamma.count_in(x_lo, x_max);
  const double gap = zeros_in >= 2 ? (x_max - x_lo) / static_cast<double>(zeros_in)
                                   : 1.0 / gamma.density();
  const double exclusion = 0.05 * gap;
  const auto buckets = static_cast<std::size_t>(std::floor((x_max - x_lo) / gap));
  if (buckets < 2) throw PreconditionError("x grid spans fewer than two zero gaps");
  std::vector<double> best(buckets, -std::numeric_limits<double>::infinity());
  std::vector<double> at(buckets, 0.0);
  for (double x : xs) {
    if (x < x_lo) continue;
    auto b = static_cast<std::size_t>((x - x_lo) / gap);
    if (b >= buckets) continue;
    if (distance_to_zero(gamma, x) < exclusion) continue;
    const double v = F.log_abs(std::complex<double>(x, 0.0));
    if (std::isfinite(v) && v > best[b]) {
      best[b] = v;
      at[b] = x;
    }
  }
  std::vector<double> fx;
  std::vector<double> fy;
  for (std::size_t b = 0; b < buckets; ++b) {
    if (std::isfinite(best[b])) {
      fx.push_back(at[b]);
      fy.push_back(best[b]);
    }
  }
  if (fx.size() < 2) throw PreconditionError("too few usable grid points for the decay fit");
  rep.empirical_rate = fit_line(fx, fy).slope;
  rep.pass = rep.empirical_rate <= rep.bound + params.fit_tolerance;
  return rep;
}

}  // namespace uniqlab::products
