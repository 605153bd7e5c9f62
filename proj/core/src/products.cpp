#include "uniqlab/products.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "uniqlab/errors.hpp"
#include "uniqlab/numerics.hpp"

namespace uniqlab::products {

namespace {

// B_{2j} / (2j)! for j = 1..6.
constexpr double kBernoulliOverFactorial[] = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
};

constexpr std::size_t kMaxTailTerms = 160;

}  // namespace

double power_tail_sum(std::size_t N, double s) {
  if (!(s >= 2.0)) throw PreconditionError("power_tail_sum needs s >= 2");
  const std::size_t head = std::max<std::size_t>(10, static_cast<std::size_t>(2.0 * s));
  double sum = 0.0;
  const std::size_t a0 = N + 1 + head;
  for (std::size_t n = a0 - 1; n > N; --n) sum += std::pow(static_cast<double>(n), -s);
  const double a = static_cast<double>(a0);
  const double as = std::pow(a, -s);
  double em = a * as / (s - 1.0) + 0.5 * as;
  double rising = s;  // s (s+1) ... (s + 2j - 2)
  double apow = as / a;
  for (std::size_t j = 0; j < std::size(kBernoulliOverFactorial); ++j) {
    em += kBernoulliOverFactorial[j] * rising * apow;
    rising *= (s + 2.0 * static_cast<double>(j) + 1.0) * (s + 2.0 * static_cast<double>(j) + 2.0);
    apow /= a * a;
  }
  return sum + em;
}

ProductModel::ProductModel(ZeroSet zeros, std::size_t n_trunc, TailMode mode)
    : zeros_(std::move(zeros)), n_trunc_(n_trunc), mode_(mode) {
  if (n_trunc_ == 0 || n_trunc_ > zeros_.size()) {
    throw PreconditionError("n_trunc must be between 1 and the number of stored zeros");
  }
  if (mode_ == TailMode::analytic && !zeros_.spacing()) {
    throw PreconditionError("analytic tail requires an arithmetic zero set");
  }
  if (const auto s = zeros_.spacing()) {
    const double inv2 = 1.0 / (*s * *s);
    tail_sum_ = inv2 * power_tail_sum(n_trunc_, 2.0);
    if (mode_ == TailMode::analytic) {
      power_tails_.reserve(kMaxTailTerms);
      double scale = 1.0;
      for (std::size_t k = 1; k <= kMaxTailTerms; ++k) {
        scale *= inv2;
        const double v = scale * power_tail_sum(n_trunc_, 2.0 * static_cast<double>(k));
        if (v == 0.0) break;
        power_tails_.push_back(v);
      }
    }
  } else {
    // Stored zeros beyond the cut, then an extrapolation gamma_n ~ n / Delta.
    long double stored = 0.0L;
    for (std::size_t n = n_trunc_; n < zeros_.size(); ++n) {
      stored += 1.0L / (static_cast<long double>(zeros_[n]) * zeros_[n]);
    }
    const double d = zeros_.empirical_density();
    tail_sum_ = static_cast<double>(stored) + d * d / static_cast<double>(zeros_.size());
  }
}

double ProductModel::validity_radius() const noexcept {
  return zeros_[n_trunc_ - 1] / std::sqrt(2.0);
}

ProductModel::Tail ProductModel::tail(complex z) const {
  const double z2 = std::norm(z);
  if (mode_ == TailMode::truncate) return {complex(0.0, 0.0), 2.0 * z2 * tail_sum_};

  // log prod_{n>N} (1 - w / n^2) = -sum_k w^k zeta_N(2k) / k, with w = z^2 / spacing^2
  // folded into power_tails_.
  const complex w = z * z;
  complex sum(0.0, 0.0);
  complex wk(1.0, 0.0);
  const double head = 1.0 / (zeros_[n_trunc_ - 1] * zeros_[n_trunc_ - 1]);
  double err = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k <= power_tails_.size(); ++k) {
    wk *= w;
    const complex term = wk * power_tails_[k - 1] / static_cast<double>(k);
    sum -= term;
    const double next_ratio = z2 * head;
    if (k < power_tails_.size()) {
      const double next = std::abs(wk) * z2 * power_tails_[k] / static_cast<double>(k + 1);
      const double rest = next / (1.0 - next_ratio);
      if (rest <= 1e-17 * std::max(1.0, std::abs(sum))) {
        err = rest;
        break;
      }
    } else {
      err = 0.0;
    }
  }
  return {sum, err};
}

ProductEval ProductModel::eval(complex z) const {
  const double radius = std::abs(z);
  if (radius > validity_radius()) throw RadiusExceededError(radius, validity_radius());
  ProductEval out;
  if (z == complex(0.0, 0.0)) {
    out.value = 1.0;
    out.log_value = 0.0;
    return out;
  }
  long double log_abs = 0.0L;
  long double arg = 0.0L;
  const auto g = zeros_.gammas();
  for (std::size_t n = 0; n < n_trunc_; ++n) {
    const complex u = z / g[n];
    const complex f = (1.0 - u) * (1.0 + u);
    if (f == complex(0.0, 0.0)) {
      out.value = 0.0;
      out.log_value = complex(-std::numeric_limits<double>::infinity(), 0.0);
      out.log_abs_err_bound = 0.0;
      return out;
    }
    log_abs += 0.5L * std::log(static_cast<long double>(std::norm(f)));
    arg += std::atan2(f.imag(), f.real());
  }
  const Tail t = tail(z);
  out.log_value = complex(static_cast<double>(log_abs), static_cast<double>(arg)) + t.log_value;
  out.value = std::exp(out.log_value);
  out.log_abs_err_bound = t.err;
  return out;
}

DerivativeAtNode ProductModel::derivative_at(std::size_t k) const {
  if (k >= n_trunc_) throw PreconditionError("node index beyond the truncation");
  const auto g = zeros_.gammas();
  const double t = g[k];
  long double log_abs = 0.0L;
  int sign = -1;  // from the -2 / t prefactor
  for (std::size_t n = 0; n < n_trunc_; ++n) {
    if (n == k) continue;
    const double u = t / g[n];
    const double f = (1.0 - u) * (1.0 + u);
    if (f < 0.0) sign = -sign;
    log_abs += std::log(static_cast<long double>(std::abs(f)));
  }
  const Tail tl = tail(complex(t, 0.0));
  DerivativeAtNode d;
  d.value = sign * (2.0 / t) * std::exp(static_cast<double>(log_abs) + tl.log_value.real());
  d.log_abs_err_bound = tl.err;
  return d;
}

ProductEval product_eval(const ProductModel& model, complex z) { return model.eval(z); }

double product_log_asymptote(double delta, double r, double theta) {
  if (!(delta > 0.0)) throw PreconditionError("density must be positive");
  return delta * kPi * r * std::abs(std::sin(theta));
}

SlopeFit asymptotic_slope_fit(const ProductModel& model, double theta,
                              std::span<const double> r_grid) {
  const double folded = std::abs(std::remainder(theta, kPi));
  if (folded < kMinRayAngle) {
    throw PreconditionError("ray is too close to the real axis for an asymptotic fit");
  }
  if (r_grid.size() < 3) throw PreconditionError("slope fit needs at least three radii");
  for (double r : r_grid) {
    if (!(r > 0.0)) throw PreconditionError("radii must be positive");
    if (r > model.validity_radius()) throw RadiusExceededError(r, model.validity_radius());
  }
  std::vector<double> design;
  std::vector<double> y;
  design.reserve(3 * r_grid.size());
  const complex dir = std::polar(1.0, theta);
  for (double r : r_grid) {
    design.insert(design.end(), {1.0, r, std::log(r)});
    y.push_back(model.eval(r * dir).log_value.real());
  }
  const auto c = least_squares(design, 3, y);
  SlopeFit fit;
  fit.intercept = c[0];
  fit.slope = c[1];
  fit.log_coefficient = c[2];
  fit.expected = model.zeros().density() * kPi * std::abs(std::sin(theta));
  fit.rel_dev = std::abs(fit.slope - fit.expected) / fit.expected;
  return fit;
}

}  // namespace uniqlab::products
