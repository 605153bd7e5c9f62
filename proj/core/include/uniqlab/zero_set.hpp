#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace uniqlab::products {

/// Positive, strictly increasing zeros gamma_1 < gamma_2 < ... of a symmetric
/// product prod (1 - z^2 / gamma_n^2).
class ZeroSet {
 public:
  explicit ZeroSet(std::vector<double> gammas, std::optional<double> known_density = std::nullopt);

  /// gamma_n = spacing * n for n = 1..count; density 1 / spacing.
  static ZeroSet arithmetic(double spacing, std::size_t count);

  std::span<const double> gammas() const noexcept { return gammas_; }
  std::size_t size() const noexcept { return gammas_.size(); }
  double operator[](std::size_t i) const { return gammas_[i]; }
  std::optional<double> known_density() const noexcept { return known_density_; }
  /// Set only for arithmetic progressions built by arithmetic().
  std::optional<double> spacing() const noexcept { return spacing_; }

  /// n / gamma_n at the last stored zero.
  double empirical_density() const;
  /// Density used for asymptotics: the known value when present.
  double density() const;

  /// Number of zeros in the closed interval [lo, hi].
  std::size_t count_in(double lo, double hi) const;
  /// Index of the zero equal to t (relative tolerance), if any.
  std::optional<std::size_t> index_of(double t, double rel_tol = 1e-12) const;

 private:
  std::vector<double> gammas_;
  std::optional<double> known_density_;
  std::optional<double> spacing_;
};

}  // namespace uniqlab::products
