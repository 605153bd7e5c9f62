#include <algorithm>
#include <cmath>
#include <string>

#include "uniqlab/errors.hpp"
#include "uniqlab/numerics.hpp"
#include "uniqlab/uniqueness.hpp"

namespace uniqlab::uniqueness {

namespace {

const double kQ0 = std::pow(2.0, 0.25);

void fill_scaled(std::size_t count, double x, double* out) {
  const double u = std::sqrt(2.0 * kPi) * x;
  out[0] = kQ0;
  if (count > 1) out[1] = std::sqrt(2.0) * u * kQ0;
  for (std::size_t n = 1; n + 1 < count; ++n) {
    const double nn = static_cast<double>(n);
    out[n + 1] = std::sqrt(2.0 / (nn + 1.0)) * u * out[n] - std::sqrt(nn / (nn + 1.0)) * out[n - 1];
  }
}

}  // namespace

HermiteBasis::HermiteBasis(std::size_t size) : size_(size) {
  if (size_ == 0) throw PreconditionError("Hermite basis needs at least one function");
}

HermiteBasis HermiteBasis::validated(std::size_t size) {
  HermiteBasis basis(size);
  basis.log_ = hermite_quadrature_check(basis);
  for (const auto& rec : basis.log_) {
    if (rec.norm_error > kNormTolerance || rec.ft_error > kFourierTolerance) {
      throw NumericalError("Hermite quadrature check failed at n = " + std::to_string(rec.n));
    }
  }
  return basis;
}

double HermiteBasis::scaled(std::size_t n, double x) const {
  if (n >= size_) throw PreconditionError("Hermite index out of range");
  std::vector<double> q(n + 1);
  fill_scaled(n + 1, x, q.data());
  return q[n];
}

double HermiteBasis::eval(std::size_t n, double x) const {
  return scaled(n, x) * std::exp(-kPi * x * x);
}

std::vector<double> HermiteBasis::scaled_all(double x) const {
  std::vector<double> q(size_);
  fill_scaled(size_, x, q.data());
  return q;
}

std::vector<double> HermiteBasis::eval_all(double x) const {
  auto q = scaled_all(x);
  const double g = std::exp(-kPi * x * x);
  for (double& v : q) v *= g;
  return q;
}

complex HermiteBasis::eigenvalue(std::size_t n) noexcept {
  switch (n % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

double hermite_eval(const HermiteBasis& basis, std::size_t n, double x) {
  return basis.eval(n, x);
}

std::vector<QuadratureRecord> hermite_quadrature_check(const HermiteBasis& basis,
                                                       std::size_t nodes, double half_width) {
  if (nodes < 3 || !(half_width > 0.0)) throw PreconditionError("bad quadrature grid");
  const std::size_t size = basis.size();
  const double dx = 2.0 * half_width / static_cast<double>(nodes - 1);

  // Samples h_n(x_i), row-major by node.
  std::vector<double> samples(nodes * size);
  std::vector<double> wx(nodes, dx);
  wx.front() = wx.back() = 0.5 * dx;
  for (std::size_t i = 0; i < nodes; ++i) {
    const auto row = basis.eval_all(-half_width + dx * static_cast<double>(i));
    std::copy(row.begin(), row.end(), samples.begin() + static_cast<std::ptrdiff_t>(i * size));
  }

  // The transform is smooth, so a coarser output grid suffices for the L2 error.
  const std::size_t out_nodes = (nodes - 1) / 8 + 1;
  const double dxi = 2.0 * half_width / static_cast<double>(out_nodes - 1);
  std::vector<double> err2(size * out_nodes, 0.0);
  parallel_for(out_nodes, [&](std::size_t j) {
    const double xi = -half_width + dxi * static_cast<double>(j);
    std::vector<complex> acc(size, complex(0.0, 0.0));
    for (std::size_t i = 0; i < nodes; ++i) {
      const double x = -half_width + dx * static_cast<double>(i);
      const double ph = -2.0 * kPi * x * xi;
      const complex w = wx[i] * complex(std::cos(ph), std::sin(ph));
      const double* s = &samples[i * size];
      for (std::size_t n = 0; n < size; ++n) acc[n] += s[n] * w;
    }
    const auto h = basis.eval_all(xi);
    for (std::size_t n = 0; n < size; ++n) {
      err2[j * size + n] = std::norm(acc[n] - HermiteBasis::eigenvalue(n) * h[n]);
    }
  });

  std::vector<QuadratureRecord> out(size);
  for (std::size_t n = 0; n < size; ++n) {
    double norm2 = 0.0;
    for (std::size_t i = 0; i < nodes; ++i) {
      const double v = samples[i * size + n];
      norm2 += wx[i] * v * v;
    }
    double e2 = 0.0;
    for (std::size_t j = 0; j < out_nodes; ++j) {
      const double w = (j == 0 || j + 1 == out_nodes) ? 0.5 * dxi : dxi;
      e2 += w * err2[j * size + n];
    }
    out[n] = {n, std::abs(std::sqrt(norm2) - 1.0), std::sqrt(e2)};
  }
  return out;
}

}  // namespace uniqlab::uniqueness
