#pragma once

// Small numerical helpers shared by the experiment modules.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace uniqlab {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kConjugacyTolerance = 1e-12;

/// q = p / (p - 1); throws unless p > 1.
double conjugate_exponent(double p);

/// Throws PreconditionError unless p, q > 1 and |1/p + 1/q - 1| <= 1e-12.
void check_conjugate(double p, double q);

/// Least-squares coefficients for y ~ X c, X given row-major with `cols` columns.
std::vector<double> least_squares(std::span<const double> design, std::size_t cols,
                                  std::span<const double> y);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);

double median(std::vector<double> values);

/// Spearman rank correlation (average ranks for ties).
double spearman(std::span<const double> x, std::span<const double> y);

/// Polynomial growth exponent of a positive sequence sampled at x (|x| large),
/// from log-values. Fits log v ~ e log|x| + c0 + c1/|x| + c2/|x|^2 on the outer
/// half of the |x| range and returns e. Non-finite samples are skipped.
double growth_exponent(std::span<const double> x, std::span<const double> log_values);

/// Tolerance separating "bounded" (exponent <= tol) from polynomial growth.
inline constexpr double kGrowthExponentTolerance = 0.5;

/// Upper bound on concurrent tasks; UNIQLAB_THREADS caps it when set.
std::size_t max_parallel_tasks();

/// Runs body(i) for i in [0, count) on up to max_parallel_tasks() threads.
/// Results must be written by index; exceptions are rethrown on the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace uniqlab
