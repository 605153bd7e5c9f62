#pragma once

// Sampling sequences with power-law density, their gap functionals, pair
// classification, and the closed-form identities behind the decay-transfer
// argument.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace uniqlab::pairs {

enum class Side { two_sided, positive };

/// Parameters of lambda_j = sign(j) ((p alpha |j|)^{1/p} + shift), 1 <= |j| <= j_max.
struct LatticeGenerator {
  double p = 2.0;
  double alpha = 0.25;
  std::size_t j_max = 0;
  double shift = 0.0;
};

class SampleSequence {
 public:
  /// Points must be strictly increasing (and positive when side == positive).
  /// `indices` labels each point; defaults to 0..n-1.
  SampleSequence(std::vector<double> points, Side side,
                 std::optional<LatticeGenerator> generator = std::nullopt,
                 std::vector<long> indices = {});

  std::span<const double> points() const noexcept { return points_; }
  std::span<const long> indices() const noexcept { return indices_; }
  Side side() const noexcept { return side_; }
  const std::optional<LatticeGenerator>& generator() const noexcept { return generator_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  /// Points in [-radius, radius].
  std::vector<double> truncated(double radius) const;
  /// Positive points, ascending.
  std::vector<double> positive_branch() const;
  /// |lambda| for the negative points, ascending (innermost first).
  std::vector<double> negative_branch() const;

 private:
  std::vector<double> points_;
  std::vector<long> indices_;
  Side side_;
  std::optional<LatticeGenerator> generator_;
};

SampleSequence make_power_lattice(double p, double alpha, std::size_t j_max, double shift = 0.0,
                                  Side side = Side::two_sided);

/// Finite-data surrogates for the limsup / liminf of |lambda_j|^{p-1} (lambda_{j+1} - lambda_j).
/// Per side, only gaps whose outer-from-origin index is >= tail_start contribute.
struct DensityEstimate {
  double alpha_plus = 0.0;   // sup over the positive tail
  double alpha_minus = 0.0;  // sup over the negative tail (NaN for one-sided data)
  double lower_plus = 0.0;   // inf over the positive tail
  double lower_minus = 0.0;  // inf over the negative tail (NaN for one-sided data)
  bool two_sided = true;
  std::size_t tail_start = 0;
  std::size_t window = 0;  // gaps used on the shorter side

  double upper() const noexcept;
  double lower() const noexcept;
};

DensityEstimate density_functional(const SampleSequence& seq, double p, std::size_t tail_start);

/// (Lambda, M, p, q) with the decay constants a, b and polynomial weight K.
struct PairSpec {
  SampleSequence lambda;
  SampleSequence mu;
  double p = 2.0;
  double q = 2.0;
  double a = 1.0;
  double b = 1.0;
  double K = 0.0;
};

/// Builds a PairSpec with q recomputed as p / (p - 1).
PairSpec make_pair_spec(SampleSequence lambda, SampleSequence mu, double p, double a = 1.0,
                        double b = 1.0, double K = 0.0);

void validate(const PairSpec& spec);

enum class Criticality { supercritical, subcritical, indeterminate };

std::string to_string(Criticality kind);

struct CriticalityVerdict {
  Criticality kind = Criticality::indeterminate;
  double product_value = 0.0;  // the product the verdict rests on
  double upper_product = 0.0;  // alpha_bar^{1/p} beta_bar^{1/q}
  double lower_product = 0.0;  // alpha_low^{1/p} beta_low^{1/q}
  double margin = 0.0;
};

inline constexpr double kDefaultVerdictMargin = 1e-6;

CriticalityVerdict classify_pair(const PairSpec& spec, const DensityEstimate& est_lambda,
                                 const DensityEstimate& est_mu,
                                 double margin = kDefaultVerdictMargin);

struct BeurlingConditionReport {
  double lhs_lambda = 0.0;
  double bound_lambda = 0.0;
  double lhs_mu = 0.0;
  double bound_mu = 0.0;
  bool pass = false;
};

/// Checks alpha_bar < (b/a)^{1/q} / 2 and beta_bar < (a/b)^{1/p} / 2.
BeurlingConditionReport beurling_condition_check(const PairSpec& spec,
                                                 const DensityEstimate& est_lambda,
                                                 const DensityEstimate& est_mu);

/// |cos(r pi / 2)|^{1/r} with r = min(p, q).
double morgan_threshold(double p, double q);

struct TrigRow {
  double theta = 0.0;
  double lhs = 0.0;  // tan(p theta) / p
  double rhs = 0.0;  // sin(theta) / cos(p theta)^{1/p}
  double margin = 0.0;
};

/// Every theta must lie strictly inside (0, pi / (2p)).
std::vector<TrigRow> trig_inequality_check(double p, std::span<const double> theta_grid);

/// Relative residual of the kappa-bound substitution eta = q kappa_hat (2 alpha)^{1-q}.
double eta_substitution_check(double alpha, double kappa_hat, double p, double q);

struct CriticalityAlgebra {
  double lhs_value = 0.0;  // (2 alpha)^q (2 beta)^p
  double rhs_value = 0.0;  // 2 alpha^{1/p} beta^{1/q}
  bool lhs_holds = false;
  bool rhs_holds = false;
  bool equivalent = false;
};

CriticalityAlgebra criticality_algebra_check(double alpha, double beta, double p, double q);

}  // namespace uniqlab::pairs
