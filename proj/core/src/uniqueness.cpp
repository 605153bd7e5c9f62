#include "uniqlab/uniqueness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/SVD>

#include "uniqlab/errors.hpp"
#include "uniqlab/numerics.hpp"

namespace uniqlab::uniqueness {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log of (1+|x|)^{-K} e^{c pi |x|^r}.
double log_weight(double x, double K, double c, double r) {
  return -K * std::log1p(std::abs(x)) + c * kPi * std::pow(std::abs(x), r);
}

std::size_t lattice_size_for(double p, double alpha, double R) {
  // (p alpha j)^{1/p} >= R once j >= R^p / (p alpha).
  return static_cast<std::size_t>(std::ceil(std::pow(R, p) / (p * alpha))) + 2;
}

double max_log_over(std::span<const double> points, const auto& log_value) {
  double best = kNegInf;
  for (double x : points) best = std::max(best, log_value(x));
  return best;
}

double exponent_over(std::span<const double> points, const auto& log_value) {
  std::vector<double> x;
  std::vector<double> v;
  for (double t : points) {
    if (t == 0.0) continue;
    x.push_back(t);
    v.push_back(log_value(t));
  }
  return growth_exponent(x, v);
}

}  // namespace

SamplingOperator build_sampling_operator(const pairs::PairSpec& pair, const HermiteBasis& basis,
                                         double R, bool weighted) {
  if (!(R > 0.0)) throw PreconditionError("truncation radius must be positive");
  SamplingOperator op;
  op.R = R;
  op.time_points = pair.lambda.truncated(R);
  op.freq_points = pair.mu.truncated(R);
  op.rows_lambda = op.time_points.size();
  op.rows_mu = op.freq_points.size();
  const std::size_t rows = op.rows_lambda + op.rows_mu;
  const std::size_t cols = basis.size();
  op.insufficient_rows = rows < cols;
  op.matrix.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  if (weighted) op.row_weights.resize(rows);

  auto fill = [&](std::size_t row, double x, bool freq) {
    const auto q = basis.scaled_all(x);
    // Combine the Gaussian factor with the weight in the log domain.
    double log_scale = -kPi * x * x;
    if (weighted) {
      const double lw = freq ? log_weight(x, pair.K, pair.b, pair.q)
                             : log_weight(x, pair.K, pair.a, pair.p);
      op.row_weights[row] = std::exp(lw);
      log_scale += lw;
    }
    const double scale = std::exp(log_scale);
    for (std::size_t n = 0; n < cols; ++n) {
      const complex e = freq ? HermiteBasis::eigenvalue(n) : complex(1.0, 0.0);
      op.matrix(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(n)) = e * (q[n] * scale);
    }
  };
  for (std::size_t i = 0; i < op.rows_lambda; ++i) fill(i, op.time_points[i], false);
  for (std::size_t i = 0; i < op.rows_mu; ++i) fill(op.rows_lambda + i, op.freq_points[i], true);
  if (!op.matrix.allFinite()) throw NumericalError("sampling operator has non-finite entries");
  return op;
}

double smallest_singular_value(const Eigen::MatrixXcd& matrix) {
  if (matrix.rows() == 0 || matrix.cols() == 0) return 0.0;
  if (!matrix.allFinite()) throw NumericalError("matrix has non-finite entries");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix);
  const auto& s = svd.singularValues();
  // Fewer rows than columns: a nontrivial kernel exists.
  if (matrix.rows() < matrix.cols()) return 0.0;
  const double v = s(s.size() - 1);
  if (!std::isfinite(v)) throw NumericalError("SVD returned a non-finite singular value");
  return v;
}

double smallest_singular_value(const SamplingOperator& op) {
  return smallest_singular_value(op.matrix);
}

double default_scan_radius(double p, std::span<const double> alpha_grid, std::size_t N) {
  const double q = conjugate_exponent(p);
  const std::size_t need = 3 * (N + 1);
  double R = std::sqrt(static_cast<double>(N) / kPi) + 2.0;
  for (double alpha : alpha_grid) {
    if (!(alpha > 0.0)) throw PreconditionError("densities must be positive");
    for (double r : {p, q}) {
      // Two-sided lattice: 2 floor(R^r / (r alpha)) points in [-R, R].
      const auto j = static_cast<double>((need + 1) / 2);
      R = std::max(R, std::pow(j * r * alpha, 1.0 / r) * (1.0 + 1e-12));
    }
  }
  return R;
}

ScanResult uniqueness_scan(double p, std::span<const double> alpha_grid, std::size_t N,
                           std::optional<double> R) {
  const double q = conjugate_exponent(p);
  if (alpha_grid.empty()) throw PreconditionError("alpha grid is empty");
  ScanResult out;
  out.N = N;
  out.R = R.value_or(default_scan_radius(p, alpha_grid, N));
  if (!(out.R > 0.0)) throw PreconditionError("truncation radius must be positive");
  out.alphas.assign(alpha_grid.begin(), alpha_grid.end());
  out.sigma_min.assign(alpha_grid.size(), 0.0);
  out.rows_lambda.assign(alpha_grid.size(), 0);
  out.rows_mu.assign(alpha_grid.size(), 0);
  const HermiteBasis basis(N + 1);
  parallel_for(alpha_grid.size(), [&](std::size_t i) {
    const double alpha = alpha_grid[i];
    if (!(alpha > 0.0)) throw PreconditionError("densities must be positive");
    auto lambda = pairs::make_power_lattice(p, alpha, lattice_size_for(p, alpha, out.R));
    auto mu = pairs::make_power_lattice(q, alpha, lattice_size_for(q, alpha, out.R));
    const auto pair = pairs::make_pair_spec(std::move(lambda), std::move(mu), p);
    const auto op = build_sampling_operator(pair, basis, out.R);
    out.sigma_min[i] = smallest_singular_value(op);
    out.rows_lambda[i] = op.rows_lambda;
    out.rows_mu[i] = op.rows_mu;
  });
  return out;
}

HardyResult hardy_growth_test(const HermiteBasis& basis, std::size_t m, std::size_t N,
                              const pairs::SampleSequence& lattice) {
  if (m >= basis.size()) throw PreconditionError("Hermite index out of range");
  const auto log_weighted = [&](double x) {
    return std::log(std::abs(basis.scaled(m, x))) -
           static_cast<double>(N) * std::log1p(std::abs(x));
  };
  HardyResult r;
  r.fit_exponent = exponent_over(lattice.points(), log_weighted);
  r.bounded = r.fit_exponent <= kGrowthExponentTolerance;
  return r;
}

SpectralFunction SpectralFunction::from_hermite(std::vector<complex> coefficients) {
  if (coefficients.empty()) throw PreconditionError("coefficient vector is empty");
  SpectralFunction f;
  f.coefficients_ = std::move(coefficients);
  return f;
}

SpectralFunction SpectralFunction::gaussian_dilation(double s) {
  if (!(s > 0.0)) throw PreconditionError("dilation must be positive");
  SpectralFunction f;
  f.dilation_ = s;
  return f;
}

namespace {

// sum_n c_n e_n q_n(x), with e_n = 1 on the time side and (-i)^n on the frequency side.
complex hermite_sum(const std::vector<complex>& c, double x, bool freq) {
  const HermiteBasis basis(c.size());
  const auto q = basis.scaled_all(x);
  complex s(0.0, 0.0);
  for (std::size_t n = 0; n < c.size(); ++n) {
    s += c[n] * q[n] * (freq ? HermiteBasis::eigenvalue(n) : complex(1.0, 0.0));
  }
  return s;
}

}  // namespace

double SpectralFunction::log_abs(double x) const {
  if (dilation_) return -kPi * *dilation_ * x * x;
  return std::log(std::abs(hermite_sum(coefficients_, x, false))) - kPi * x * x;
}

double SpectralFunction::log_abs_transform(double xi) const {
  if (dilation_) return -0.5 * std::log(*dilation_) - kPi * xi * xi / *dilation_;
  return std::log(std::abs(hermite_sum(coefficients_, xi, true))) - kPi * xi * xi;
}

complex SpectralFunction::value(double x) const {
  if (dilation_) return std::exp(log_abs(x));
  return hermite_sum(coefficients_, x, false) * std::exp(-kPi * x * x);
}

complex SpectralFunction::transform(double xi) const {
  if (dilation_) return std::exp(log_abs_transform(xi));
  return hermite_sum(coefficients_, xi, true) * std::exp(-kPi * xi * xi);
}

TransferReport decay_transfer_experiment(const SpectralFunction& f, const pairs::PairSpec& pair,
                                         std::span<const double> real_grid,
                                         std::span<const double> freq_grid,
                                         std::size_t tail_start) {
  pairs::validate(pair);
  const auto est_l = pairs::density_functional(pair.lambda, pair.p, tail_start);
  const auto est_m = pairs::density_functional(pair.mu, pair.q, tail_start);
  const auto cond = pairs::beurling_condition_check(pair, est_l, est_m);
  if (!cond.pass) {
    throw PreconditionError("pair fails the density condition of the transfer principle");
  }
  if (real_grid.empty() || freq_grid.empty()) throw PreconditionError("grids must be nonempty");

  TransferReport r;
  r.a = pair.a;
  r.b = pair.b;
  r.p = pair.p;
  r.q = pair.q;
  r.K = pair.K;

  const auto time_at = [&](double K) {
    return [&f, &pair, K](double x) { return f.log_abs(x) + log_weight(x, K, pair.a, pair.p); };
  };
  const auto freq_at = [&](double K) {
    return [&f, &pair, K](double xi) {
      return f.log_abs_transform(xi) + log_weight(xi, K, pair.b, pair.q);
    };
  };

  r.log_sup_lambda = max_log_over(pair.lambda.points(), time_at(pair.K));
  r.log_sup_mu = max_log_over(pair.mu.points(), freq_at(pair.K));
  r.exponent_lambda = exponent_over(pair.lambda.points(), time_at(pair.K));
  r.exponent_mu = exponent_over(pair.mu.points(), freq_at(pair.K));
  r.hypothesis_holds = r.exponent_lambda <= kGrowthExponentTolerance &&
                       r.exponent_mu <= kGrowthExponentTolerance;

  r.exponent_real = exponent_over(real_grid, time_at(0.0));
  r.exponent_freq = exponent_over(freq_grid, freq_at(0.0));
  for (int k = 0; k <= kMaxKTilde; ++k) {
    const double kk = static_cast<double>(k);
    if (exponent_over(real_grid, time_at(kk)) <= kGrowthExponentTolerance &&
        exponent_over(freq_grid, freq_at(kk)) <= kGrowthExponentTolerance) {
      r.k_tilde = k;
      break;
    }
  }
  const double k_sup = r.k_tilde ? static_cast<double>(*r.k_tilde) : pair.K;
  r.log_sup_real = max_log_over(real_grid, time_at(k_sup));
  r.log_sup_freq = max_log_over(freq_grid, freq_at(k_sup));
  r.sup_lambda = std::exp(r.log_sup_lambda);
  r.sup_mu = std::exp(r.log_sup_mu);
  r.sup_real = std::exp(r.log_sup_real);
  r.sup_freq = std::exp(r.log_sup_freq);
  return r;
}

}  // namespace uniqlab::uniqueness
