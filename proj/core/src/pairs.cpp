#include "uniqlab/pairs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "uniqlab/errors.hpp"
#include "uniqlab/numerics.hpp"

namespace uniqlab::pairs {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct TailStats {
  double sup = 0.0;
  double inf = 0.0;
  std::size_t count = 0;
};

// Gap functional along one branch given magnitudes ascending from the origin.
// For the positive branch the weight sits on the inner point of each gap, for the
// negative branch on the outer point (|lambda_j| with lambda_j < lambda_{j+1} < 0).
TailStats branch_stats(const std::vector<double>& mags, double p, std::size_t tail_start,
                       bool weight_outer) {
  TailStats s;
  s.sup = -std::numeric_limits<double>::infinity();
  s.inf = std::numeric_limits<double>::infinity();
  for (std::size_t k = tail_start; k + 1 < mags.size(); ++k) {
    const double gap = mags[k + 1] - mags[k];
    const double base = weight_outer ? mags[k + 1] : mags[k];
    const double v = std::pow(base, p - 1.0) * gap;
    s.sup = std::max(s.sup, v);
    s.inf = std::min(s.inf, v);
    ++s.count;
  }
  return s;
}

}  // namespace

SampleSequence::SampleSequence(std::vector<double> points, Side side,
                               std::optional<LatticeGenerator> generator,
                               std::vector<long> indices)
    : points_(std::move(points)),
      indices_(std::move(indices)),
      side_(side),
      generator_(generator) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i])) throw PreconditionError("sample points must be finite");
    if (i > 0 && !(points_[i] > points_[i - 1])) {
      throw PreconditionError("sample points must be strictly increasing");
    }
  }
  if (side_ == Side::positive && !points_.empty() && !(points_.front() > 0.0)) {
    throw PreconditionError("one-sided sequence must contain positive points only");
  }
  if (indices_.empty()) {
    indices_.resize(points_.size());
    std::iota(indices_.begin(), indices_.end(), 0L);
  } else if (indices_.size() != points_.size()) {
    throw PreconditionError("index labels must match the number of points");
  }
}

std::vector<double> SampleSequence::truncated(double radius) const {
  std::vector<double> out;
  for (double x : points_) {
    if (std::abs(x) <= radius) out.push_back(x);
  }
  return out;
}

std::vector<double> SampleSequence::positive_branch() const {
  std::vector<double> out;
  for (double x : points_) {
    if (x > 0.0) out.push_back(x);
  }
  return out;
}

std::vector<double> SampleSequence::negative_branch() const {
  std::vector<double> out;
  for (auto it = points_.rbegin(); it != points_.rend(); ++it) {
    if (*it < 0.0) out.push_back(-*it);
  }
  return out;
}

SampleSequence make_power_lattice(double p, double alpha, std::size_t j_max, double shift,
                                  Side side) {
  if (!(p > 1.0) || !std::isfinite(p)) throw PreconditionError("power lattice needs p > 1");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw PreconditionError("power lattice needs alpha > 0");
  }
  if (j_max < 2) throw PreconditionError("power lattice needs j_max >= 2");

  const double c = p * alpha;
  std::vector<double> pos(j_max);
  for (std::size_t j = 1; j <= j_max; ++j) {
    pos[j - 1] = std::pow(c * static_cast<double>(j), 1.0 / p) + shift;
  }
  std::vector<double> points;
  std::vector<long> indices;
  if (side == Side::two_sided) {
    points.reserve(2 * j_max);
    indices.reserve(2 * j_max);
    for (std::size_t j = j_max; j >= 1; --j) {
      points.push_back(-pos[j - 1]);
      indices.push_back(-static_cast<long>(j));
    }
  }
  for (std::size_t j = 1; j <= j_max; ++j) {
    points.push_back(pos[j - 1]);
    indices.push_back(static_cast<long>(j));
  }
  return SampleSequence(std::move(points), side, LatticeGenerator{p, alpha, j_max, shift},
                        std::move(indices));
}

double DensityEstimate::upper() const noexcept {
  return two_sided ? std::max(alpha_plus, alpha_minus) : alpha_plus;
}

double DensityEstimate::lower() const noexcept {
  return two_sided ? std::min(lower_plus, lower_minus) : lower_plus;
}

DensityEstimate density_functional(const SampleSequence& seq, double p, std::size_t tail_start) {
  if (!(p > 1.0)) throw PreconditionError("density functional needs p > 1");
  const auto pos = seq.positive_branch();
  const auto neg = seq.negative_branch();
  if (pos.size() < tail_start + 2) {
    throw PreconditionError("too few points on the positive side for the requested tail");
  }
  DensityEstimate est;
  est.tail_start = tail_start;
  const auto plus = branch_stats(pos, p, tail_start, false);
  est.alpha_plus = plus.sup;
  est.lower_plus = plus.inf;
  est.window = plus.count;
  est.two_sided = seq.side() == Side::two_sided;
  if (est.two_sided) {
    if (neg.size() < tail_start + 2) {
      throw PreconditionError("too few points on the negative side for the requested tail");
    }
    const auto minus = branch_stats(neg, p, tail_start, true);
    est.alpha_minus = minus.sup;
    est.lower_minus = minus.inf;
    est.window = std::min(est.window, minus.count);
  } else {
    est.alpha_minus = kNaN;
    est.lower_minus = kNaN;
  }
  return est;
}

PairSpec make_pair_spec(SampleSequence lambda, SampleSequence mu, double p, double a, double b,
                        double K) {
  PairSpec spec{std::move(lambda), std::move(mu), p, conjugate_exponent(p), a, b, K};
  validate(spec);
  return spec;
}

void validate(const PairSpec& spec) {
  check_conjugate(spec.p, spec.q);
  if (!(spec.a > 0.0) || !(spec.b > 0.0)) throw PreconditionError("a and b must be positive");
  if (!(spec.K >= 0.0)) throw PreconditionError("K must be non-negative");
}

std::string to_string(Criticality kind) {
  switch (kind) {
    case Criticality::supercritical:
      return "supercritical";
    case Criticality::subcritical:
      return "subcritical";
    case Criticality::indeterminate:
      break;
  }
  return "indeterminate";
}

CriticalityVerdict classify_pair(const PairSpec& spec, const DensityEstimate& est_lambda,
                                 const DensityEstimate& est_mu, double margin) {
  validate(spec);
  CriticalityVerdict v;
  v.margin = margin;
  v.upper_product =
      std::pow(est_lambda.upper(), 1.0 / spec.p) * std::pow(est_mu.upper(), 1.0 / spec.q);
  v.lower_product =
      std::pow(est_lambda.lower(), 1.0 / spec.p) * std::pow(est_mu.lower(), 1.0 / spec.q);
  if (v.upper_product < 0.5 - margin) {
    v.kind = Criticality::supercritical;
    v.product_value = v.upper_product;
  } else if (v.lower_product > 0.5 + margin) {
    v.kind = Criticality::subcritical;
    v.product_value = v.lower_product;
  } else {
    v.kind = Criticality::indeterminate;
    v.product_value = v.upper_product;
  }
  return v;
}

BeurlingConditionReport beurling_condition_check(const PairSpec& spec,
                                                 const DensityEstimate& est_lambda,
                                                 const DensityEstimate& est_mu) {
  validate(spec);
  BeurlingConditionReport r;
  r.lhs_lambda = est_lambda.upper();
  r.lhs_mu = est_mu.upper();
  r.bound_lambda = 0.5 * std::pow(spec.b / spec.a, 1.0 / spec.q);
  r.bound_mu = 0.5 * std::pow(spec.a / spec.b, 1.0 / spec.p);
  r.pass = r.lhs_lambda < r.bound_lambda && r.lhs_mu < r.bound_mu;
  return r;
}

double morgan_threshold(double p, double q) {
  check_conjugate(p, q);
  const double r = std::min(p, q);
  return std::pow(std::abs(std::cos(r * kPi / 2.0)), 1.0 / r);
}

std::vector<TrigRow> trig_inequality_check(double p, std::span<const double> theta_grid) {
  if (!(p > 1.0)) throw PreconditionError("trig inequality needs p > 1");
  const double upper = kPi / (2.0 * p);
  std::vector<TrigRow> rows;
  rows.reserve(theta_grid.size());
  for (double theta : theta_grid) {
    if (!(theta > 0.0 && theta < upper)) {
      throw PreconditionError("theta must lie strictly inside (0, pi / (2p))");
    }
    TrigRow row;
    row.theta = theta;
    row.lhs = std::tan(p * theta) / p;
    row.rhs = std::sin(theta) / std::pow(std::cos(p * theta), 1.0 / p);
    row.margin = row.lhs - row.rhs;
    rows.push_back(row);
  }
  return rows;
}

double eta_substitution_check(double alpha, double kappa_hat, double p, double q) {
  check_conjugate(p, q);
  if (!(alpha > 0.0) || !(kappa_hat > 0.0)) {
    throw PreconditionError("alpha and kappa_hat must be positive");
  }
  const double two_alpha = 2.0 * alpha;
  const double qk = q * kappa_hat;
  const double eta = qk * std::pow(two_alpha, 1.0 - q);
  const double lhs = eta / two_alpha - std::pow(eta, p) / (p * std::pow(qk, p / q));
  const double target = std::pow(two_alpha, -q) * kappa_hat;
  return std::abs(lhs - target) / std::abs(target);
}

CriticalityAlgebra criticality_algebra_check(double alpha, double beta, double p, double q) {
  check_conjugate(p, q);
  if (!(alpha > 0.0) || !(beta > 0.0)) throw PreconditionError("alpha and beta must be positive");
  CriticalityAlgebra c;
  c.lhs_value = std::pow(2.0 * alpha, q) * std::pow(2.0 * beta, p);
  c.rhs_value = 2.0 * std::pow(alpha, 1.0 / p) * std::pow(beta, 1.0 / q);
  c.lhs_holds = c.lhs_value > 1.0;
  c.rhs_holds = c.rhs_value > 1.0;
  c.equivalent = c.lhs_holds == c.rhs_holds;
  return c;
}

}  // namespace uniqlab::pairs
