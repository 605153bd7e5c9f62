#pragma once

// Desk-scale probes of uniqueness and decay transfer for sampling pairs, built on
// Hermite functions, which diagonalize the Fourier transform
//   f^(xi) = int f(x) exp(-2 pi i x xi) dx.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "uniqlab/pairs.hpp"

namespace uniqlab::uniqueness {

using complex = std::complex<double>;

/// Quadrature diagnostics for one basis function.
struct QuadratureRecord {
  std::size_t n = 0;
  double norm_error = 0.0;  // | ||h_n||_2 - 1 |
  double ft_error = 0.0;    // || h_n^ - (-i)^n h_n ||_2
};

inline constexpr double kNormTolerance = 1e-8;
inline constexpr double kFourierTolerance = 1e-6;

/// h_n(x) = q_n(x) exp(-pi x^2) with q_0 = 2^{1/4} and, for u = sqrt(2 pi) x,
///   q_{n+1} = sqrt(2/(n+1)) u q_n - sqrt(n/(n+1)) q_{n-1}.
class HermiteBasis {
 public:
  /// Functions h_0 .. h_{size-1}; size >= 1.
  explicit HermiteBasis(std::size_t size);

  /// Runs the quadrature checks and throws NumericalError if any fails.
  static HermiteBasis validated(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  double eval(std::size_t n, double x) const;
  /// q_n(x) = h_n(x) exp(pi x^2).
  double scaled(std::size_t n, double x) const;
  std::vector<double> eval_all(double x) const;
  std::vector<double> scaled_all(double x) const;
  /// (-i)^n.
  static complex eigenvalue(std::size_t n) noexcept;

  /// Filled by validated(); empty otherwise.
  const std::vector<QuadratureRecord>& normalization_log() const noexcept { return log_; }

 private:
  std::size_t size_;
  std::vector<QuadratureRecord> log_;
};

double hermite_eval(const HermiteBasis& basis, std::size_t n, double x);

/// Composite trapezoid on [-half_width, half_width] with `nodes` points.
std::vector<QuadratureRecord> hermite_quadrature_check(const HermiteBasis& basis,
                                                       std::size_t nodes = 4097,
                                                       double half_width = 8.0);

struct SamplingOperator {
  Eigen::MatrixXcd matrix;  // time rows first, then frequency rows
  double R = 0.0;
  std::vector<double> time_points;
  std::vector<double> freq_points;
  std::vector<double> row_weights;  // empty when unweighted
  std::size_t rows_lambda = 0;
  std::size_t rows_mu = 0;
  bool insufficient_rows = false;  // fewer rows than basis functions
};

/// Time rows h_n(lambda) for lambda in Lambda cap [-R, R], frequency rows (-i)^n h_n(mu)
/// for mu in M cap [-R, R]. When weighted, rows are scaled by
/// (1+|lambda|)^{-K} e^{a pi |lambda|^p} and (1+|mu|)^{-K} e^{b pi |mu|^q}.
SamplingOperator build_sampling_operator(const pairs::PairSpec& pair, const HermiteBasis& basis,
                                         double R, bool weighted = false);

/// Dense SVD; 0 for a matrix without rows.
double smallest_singular_value(const SamplingOperator& op);
double smallest_singular_value(const Eigen::MatrixXcd& matrix);

struct ScanResult {
  std::vector<double> alphas;
  std::vector<double> sigma_min;
  std::size_t N = 0;
  double R = 0.0;
  std::vector<std::size_t> rows_lambda;
  std::vector<std::size_t> rows_mu;
};

/// Smallest R >= sqrt(N / pi) + 2 at which every lattice of the grid has >= 3(N+1)
/// points in [-R, R].
double default_scan_radius(double p, std::span<const double> alpha_grid, std::size_t N);

/// Lambda = power lattice (p, alpha), M = power lattice (q, alpha), basis h_0..h_N.
ScanResult uniqueness_scan(double p, std::span<const double> alpha_grid, std::size_t N,
                           std::optional<double> R = std::nullopt);

struct HardyResult {
  double fit_exponent = 0.0;
  bool bounded = false;
};

/// Growth of |h_m(lambda)| (1+|lambda|)^{-N} e^{pi lambda^2} along the lattice.
HardyResult hardy_growth_test(const HermiteBasis& basis, std::size_t m, std::size_t N,
                              const pairs::SampleSequence& lattice);

/// A function known through closed forms of log|f| and log|f^|.
class SpectralFunction {
 public:
  /// f = sum_n c_n h_n.
  static SpectralFunction from_hermite(std::vector<complex> coefficients);
  /// f(x) = exp(-pi s x^2), f^(xi) = s^{-1/2} exp(-pi xi^2 / s).
  static SpectralFunction gaussian_dilation(double s);

  complex value(double x) const;
  complex transform(double xi) const;
  double log_abs(double x) const;
  double log_abs_transform(double xi) const;

  const std::vector<complex>& coefficients() const noexcept { return coefficients_; }
  std::optional<double> dilation() const noexcept { return dilation_; }

 private:
  std::vector<complex> coefficients_;
  std::optional<double> dilation_;
};

inline constexpr int kMaxKTilde = 50;

struct TransferReport {
  double sup_lambda = 0.0;
  double sup_mu = 0.0;
  double sup_real = 0.0;  // at K~ when found, else at K
  double sup_freq = 0.0;
  double log_sup_lambda = 0.0;
  double log_sup_mu = 0.0;
  double log_sup_real = 0.0;
  double log_sup_freq = 0.0;
  double exponent_lambda = 0.0;  // growth exponents of the weighted samples at weight K
  double exponent_mu = 0.0;
  double exponent_real = 0.0;  // at weight 0 before the K~ search
  double exponent_freq = 0.0;
  double a = 0.0;
  double b = 0.0;
  double p = 0.0;
  double q = 0.0;
  double K = 0.0;
  std::optional<int> k_tilde;
  bool hypothesis_holds = false;
};

/// Throws PreconditionError when the pair fails the density condition of the transfer
/// principle (estimated with density_functional at the given tail start).
TransferReport decay_transfer_experiment(const SpectralFunction& f, const pairs::PairSpec& pair,
                                         std::span<const double> real_grid,
                                         std::span<const double> freq_grid,
                                         std::size_t tail_start = 0);

}  // namespace uniqlab::uniqueness
