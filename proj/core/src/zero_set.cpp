#include "uniqlab/zero_set.hpp"

#include <algorithm>
#include <cmath>

#include "uniqlab/errors.hpp"

namespace uniqlab::products {

ZeroSet::ZeroSet(std::vector<double> gammas, std::optional<double> known_density)
    : gammas_(std::move(gammas)), known_density_(known_density) {
  if (gammas_.empty()) throw PreconditionError("zero set must be non-empty");
  if (!(gammas_.front() > 0.0)) throw PreconditionError("zeros must be positive (gamma_1 > 0)");
  for (std::size_t i = 1; i < gammas_.size(); ++i) {
    if (!(gammas_[i] > gammas_[i - 1]) || !std::isfinite(gammas_[i])) {
      throw PreconditionError("zeros must be finite and strictly increasing");
    }
  }
  if (known_density_) {
    if (!(*known_density_ > 0.0)) throw PreconditionError("known density must be positive");
    // n / gamma_n must be close to the declared limit on a reasonably long prefix.
    if (gammas_.size() >= 20) {
      const double rel = std::abs(empirical_density() - *known_density_) / *known_density_;
      if (rel > 0.1) {
        throw PreconditionError("declared density disagrees with n / gamma_n on the prefix");
      }
    }
  }
}

ZeroSet ZeroSet::arithmetic(double spacing, std::size_t count) {
  if (!(spacing > 0.0) || count == 0) {
    throw PreconditionError("arithmetic zero set needs spacing > 0 and count >= 1");
  }
  std::vector<double> g(count);
  for (std::size_t n = 1; n <= count; ++n) g[n - 1] = spacing * static_cast<double>(n);
  ZeroSet z(std::move(g), 1.0 / spacing);
  z.spacing_ = spacing;
  return z;
}

double ZeroSet::empirical_density() const {
  return static_cast<double>(gammas_.size()) / gammas_.back();
}

double ZeroSet::density() const { return known_density_ ? *known_density_ : empirical_density(); }

std::size_t ZeroSet::count_in(double lo, double hi) const {
  if (hi < lo) return 0;
  const auto first = std::lower_bound(gammas_.begin(), gammas_.end(), lo);
  const auto last = std::upper_bound(gammas_.begin(), gammas_.end(), hi);
  return last > first ? static_cast<std::size_t>(last - first) : 0;
}

std::optional<std::size_t> ZeroSet::index_of(double t, double rel_tol) const {
  const double tol = rel_tol * std::max(1.0, std::abs(t));
  auto it = std::lower_bound(gammas_.begin(), gammas_.end(), t - tol);
  if (it != gammas_.end() && std::abs(*it - t) <= tol) {
    return static_cast<std::size_t>(it - gammas_.begin());
  }
  return std::nullopt;
}

}  // namespace uniqlab::products
