#include "uniqlab/numerics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>

#include <Eigen/Dense>

#include "uniqlab/errors.hpp"

namespace uniqlab {

namespace {

std::string format_window(std::size_t block, std::size_t slot, double lo, double hi) {
  std::ostringstream os;
  os << "no sample point in selection window (n=" << block << ", s=" << slot << ") = [" << lo
     << ", " << hi << "]";
  return os.str();
}

std::string format_radius(double radius, double limit) {
  std::ostringstream os;
  os << "|z| = " << radius << " exceeds the certified radius " << limit;
  return os.str();
}

std::vector<double> ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
    i = j + 1;
  }
  return r;
}

}  // namespace

RadiusExceededError::RadiusExceededError(double radius, double limit)
    : PreconditionError(format_radius(radius, limit)), radius_(radius), limit_(limit) {}

WindowEmptyError::WindowEmptyError(std::size_t block, std::size_t slot, double lo, double hi)
    : PreconditionError(format_window(block, slot, lo, hi)), block_(block), slot_(slot) {}

double conjugate_exponent(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw PreconditionError("exponent p must satisfy 1 < p < inf");
  }
  return p / (p - 1.0);
}

void check_conjugate(double p, double q) {
  if (!(p > 1.0) || !(q > 1.0) || !std::isfinite(p) || !std::isfinite(q)) {
    throw PreconditionError("exponents p, q must both exceed 1");
  }
  if (std::abs(1.0 / p + 1.0 / q - 1.0) > kConjugacyTolerance) {
    throw PreconditionError("exponents p, q are not Hoelder conjugate (1/p + 1/q != 1)");
  }
}

std::vector<double> least_squares(std::span<const double> design, std::size_t cols,
                                  std::span<const double> y) {
  if (cols == 0 || design.size() != cols * y.size() || y.size() < cols) {
    throw PreconditionError("least_squares: inconsistent or underdetermined system");
  }
  const auto rows = static_cast<Eigen::Index>(y.size());
  Eigen::MatrixXd a(rows, static_cast<Eigen::Index>(cols));
  Eigen::VectorXd b(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      a(i, static_cast<Eigen::Index>(j)) = design[static_cast<std::size_t>(i) * cols + j];
    }
    b(i) = y[static_cast<std::size_t>(i)];
  }
  // Column scaling keeps the QR well conditioned for mixed-magnitude regressors.
  Eigen::VectorXd scale = a.colwise().norm().transpose();
  for (Eigen::Index j = 0; j < scale.size(); ++j) {
    if (scale(j) == 0.0) scale(j) = 1.0;
    a.col(j) /= scale(j);
  }
  Eigen::VectorXd c = a.colPivHouseholderQr().solve(b);
  std::vector<double> out(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    out[j] = c(static_cast<Eigen::Index>(j)) / scale(static_cast<Eigen::Index>(j));
  }
  return out;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw PreconditionError("fit_line: need at least two points");
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw PreconditionError("fit_line: degenerate abscissae");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

double median(std::vector<double> values) {
  if (values.empty()) throw PreconditionError("median of empty set");
  const auto mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower =
      *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw PreconditionError("spearman: need two equally sized samples");
  }
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

double growth_exponent(std::span<const double> x, std::span<const double> log_values) {
  if (x.size() != log_values.size()) {
    throw PreconditionError("growth_exponent: size mismatch");
  }
  double rmax = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::isfinite(log_values[i])) rmax = std::max(rmax, std::abs(x[i]));
  }
  std::vector<double> design;
  std::vector<double> y;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = std::abs(x[i]);
    if (!std::isfinite(log_values[i]) || r < 0.5 * rmax || r <= 0.0) continue;
    design.insert(design.end(), {std::log(r), 1.0, 1.0 / r, 1.0 / (r * r)});
    y.push_back(log_values[i]);
  }
  if (y.size() < 6) {
    throw PreconditionError("growth_exponent: need at least six finite samples in the outer half");
  }
  return least_squares(design, 4, y)[0];
}

std::size_t max_parallel_tasks() {
  std::size_t cap = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("UNIQLAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) cap = static_cast<std::size_t>(v);
  }
  return cap;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(count, max_parallel_tasks());
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace uniqlab
