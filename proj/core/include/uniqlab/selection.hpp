#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace uniqlab::interpolation {

/// Subsequence T' with exactly m points per block [nL, (n+1)L) for n >= start_n,
/// the s-th of them in [nL + s ell, nL + s ell + h], ell = L / m.
struct UniformSelection {
  std::vector<double> t_prime;
  std::vector<std::size_t> source_index;  // position of each selected point in T
  double L = 0.0;
  std::size_t m_per_interval = 0;
  double h = 0.0;
  double ell = 0.0;
  std::size_t start_n = 0;
};

/// Picks the first point of T in every window. With adaptive_start, empty windows
/// push start_n past the last failing block (at least two full blocks must remain);
/// otherwise the first empty window raises WindowEmptyError.
UniformSelection select_uniform_subsequence(std::span<const double> T, double L,
                                            std::size_t m_per_interval, double h,
                                            std::size_t start_n = 0, bool adaptive_start = true);

bool selection_invariants_hold(const UniformSelection& sel);

}  // namespace uniqlab::interpolation
