#pragma once

// Beurling-type interpolation on a uniformly distributed node set:
//   g(z) = sum_k ((1+z)/(1+t_k))^K Pi(z) / (Pi'(t_k) (z - t_k)) eta_k,
// where Pi is the symmetric product over {+-t_k}.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "uniqlab/products.hpp"
#include "uniqlab/selection.hpp"

namespace uniqlab::interpolation {

using complex = std::complex<double>;

inline constexpr std::size_t kMinBeurlingTerms = 1000;
inline constexpr double kRemovableRadius = 1e-8;

/// B_{t'}(z) = prod over gamma in {+-t_n : n < n_trunc} \ {t'} of (1 - z / (gamma - t')).
/// n_trunc >= kMinBeurlingTerms.
complex shifted_beurling_product(const UniformSelection& sel, std::size_t t_prime_idx, complex z,
                                 std::size_t n_trunc);

/// max over a polar grid of |B_{t'}(z)| (1+|z|)^{-5m} exp(-pi nu |Im z|), per radius shell.
struct BeurlingGrowth {
  double nu = 0.0;
  std::vector<double> radii;
  std::vector<double> log_shell_max;  // log of |B| exp(-pi nu |Im z|), no polynomial weight
  double max_ratio = 0.0;             // with the (1+|z|)^{-5m} weight
};

BeurlingGrowth beurling_growth_diagnostic(const UniformSelection& sel, std::size_t t_prime_idx,
                                          double nu, std::span<const double> radii,
                                          std::size_t n_angles, std::size_t n_trunc);

/// Pi'(t_k) for a zero t_k of the model; PreconditionError when t_k is not a zero.
products::DerivativeAtNode product_derivative_at_node(const products::ProductModel& product,
                                                      double t_k);

/// Line y = -K0 x + log C under every point (x = log(1+t), y = log|Pi'(t)|), fitted by
/// least squares on the lower convex hull and shifted down to touch the scatter.
struct EnvelopeFit {
  double K0_fit = 0.0;
  double C_fit = 0.0;
  std::size_t violations = 0;
};

EnvelopeFit lower_envelope_fit(std::span<const double> nodes,
                               std::span<const double> abs_derivatives);

struct InterpolantOptions {
  std::optional<int> K;          // default ceil(max(K0, N0)) + 3
  std::size_t n_terms = 500;
  std::size_t n_trunc = 0;       // 0: every selected node
  std::optional<double> nu;      // default 1.2 m / L
  /// Nodes of the form s, 2s, 3s, ... get the exact product tail beyond n_trunc.
  bool analytic_tail = true;
};

class InterpolantModel {
 public:
  InterpolantModel(UniformSelection selection, std::vector<complex> eta,
                   InterpolantOptions options = {});

  const UniformSelection& selection() const noexcept { return selection_; }
  const std::vector<complex>& eta() const noexcept { return eta_; }
  const products::ProductModel& product() const noexcept { return product_; }
  std::span<const double> d_pi() const noexcept { return d_pi_; }
  int K() const noexcept { return K_; }
  double K0_fit() const noexcept { return envelope_.K0_fit; }
  double C_fit() const noexcept { return envelope_.C_fit; }
  double N0_fit() const noexcept { return N0_fit_; }
  double nu() const noexcept { return nu_; }
  std::size_t n_terms() const noexcept { return n_terms_; }
  /// sum of the last block of (1+t_k)^{K0-K} over the whole truncated sum.
  double series_tail_ratio() const noexcept { return series_tail_ratio_; }

  /// Same nodes and options, new data.
  InterpolantModel with_data(std::vector<complex> eta) const;

  nlohmann::json to_json() const;

 private:
  UniformSelection selection_;
  std::vector<complex> eta_;
  InterpolantOptions options_;
  products::ProductModel product_;
  std::size_t n_terms_ = 0;
  std::vector<double> d_pi_;
  std::vector<double> coef_;  // 1 / ((1+t_k)^K Pi'(t_k))
  EnvelopeFit envelope_;
  double N0_fit_ = 0.0;
  int K_ = 0;
  double nu_ = 0.0;
  double series_tail_ratio_ = 0.0;
};

EnvelopeFit derivative_lower_bound_fit(const InterpolantModel& model);

struct InterpolantValue {
  complex value;
  double truncation = 0.0;  // magnitude of the last block of terms
};

InterpolantValue interpolant_eval(const InterpolantModel& model, complex z);

struct InterpolationRow {
  double node = 0.0;
  complex eta;
  complex g_value;
  double residual = 0.0;
};

struct InterpolationReport {
  double max_residual = 0.0;
  bool pass = false;
  std::vector<InterpolationRow> rows;
};

InterpolationReport verify_interpolation(const InterpolantModel& model, double tol,
                                         std::size_t n_check = 20);

inline constexpr double kSectorTrendTolerance = 0.1;

struct GrowthReport {
  double sector_ratio_max = 0.0;  // empirical C in |g| <= C delta^{-1} (1+r)^K |Pi|
  double sector_trend = 0.0;      // log-log slope of the ratio maximum, outer half of radii
  std::vector<double> radii;
  std::vector<double> ratio_by_radius;
  double real_exponent_fit = 0.0;
  double real_exponent_bound = 0.0;  // K + N0_fit
};

/// Sector points r e^{i theta} (|theta| < pi/2) and real points must keep distance
/// 0.05 (ell - h) from every zero of Pi.
GrowthReport verify_growth_bounds(const InterpolantModel& model, std::span<const double> radii,
                                  std::span<const double> angles,
                                  std::span<const double> real_grid);

}  // namespace uniqlab::interpolation
