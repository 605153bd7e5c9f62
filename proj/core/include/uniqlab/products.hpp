#pragma once

// Truncated symmetric canonical products with a certified tail bound.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "uniqlab/zero_set.hpp"

namespace uniqlab::products {

using complex = std::complex<double>;

enum class TailMode {
  truncate,  // value is the finite product; bound is 2|z|^2 sum_{n>N} gamma_n^{-2}
  analytic,  // arithmetic zeros only: the omitted factors are summed as a power series
};

struct ProductEval {
  complex value;
  complex log_value;  // log|value| + i arg(value), accumulated factor by factor
  double log_abs_err_bound = 0.0;
};

struct DerivativeAtNode {
  double value = 0.0;
  double log_abs_err_bound = 0.0;
};

class ProductModel {
 public:
  ProductModel(ZeroSet zeros, std::size_t n_trunc, TailMode mode = TailMode::truncate);

  const ZeroSet& zeros() const noexcept { return zeros_; }
  std::size_t n_trunc() const noexcept { return n_trunc_; }
  TailMode tail_mode() const noexcept { return mode_; }

  /// gamma_{n_trunc} / sqrt(2); every omitted factor has |z^2/gamma^2| <= 1/2 inside.
  double validity_radius() const noexcept;
  /// Upper estimate of sum_{n > n_trunc} gamma_n^{-2} (exact for arithmetic zeros).
  double tail_sum() const noexcept { return tail_sum_; }

  /// Throws RadiusExceededError outside validity_radius().
  ProductEval eval(complex z) const;
  /// Pi'(gamma_k) for the zero with 0-based index k < n_trunc.
  DerivativeAtNode derivative_at(std::size_t k) const;

 private:
  struct Tail {
    complex log_value;
    double err = 0.0;
  };
  Tail tail(complex z) const;

  ZeroSet zeros_;
  std::size_t n_trunc_;
  TailMode mode_;
  double tail_sum_ = 0.0;
  std::vector<double> power_tails_;  // analytic mode: sum_{n>N} (spacing n)^{-2k}, k = 1, 2, ...
};

ProductEval product_eval(const ProductModel& model, complex z);

/// Main term Delta pi r |sin(theta)| of log|Pi(r e^{i theta})|.
double product_log_asymptote(double delta, double r, double theta);

struct SlopeFit {
  double slope = 0.0;
  double expected = 0.0;  // Delta pi |sin theta|
  double rel_dev = 0.0;
  double log_coefficient = 0.0;
  double intercept = 0.0;
};

inline constexpr double kMinRayAngle = 0.1;

/// Least-squares fit of log|Pi(r e^{i theta})| ~ c0 + slope r + c1 log r over r_grid.
/// theta must stay kMinRayAngle away from the real axis.
SlopeFit asymptotic_slope_fit(const ProductModel& model, double theta,
                              std::span<const double> r_grid);

/// Sum_{n > N} n^{-s} for integer-valued s >= 2 (Euler-Maclaurin after a direct head).
double power_tail_sum(std::size_t N, double s);

}  // namespace uniqlab::products
