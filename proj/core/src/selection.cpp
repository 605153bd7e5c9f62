#include "uniqlab/selection.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>

#include "uniqlab/errors.hpp"

namespace uniqlab::interpolation {

namespace {

struct Window {
  std::size_t n;
  std::size_t s;
  double lo;
  double hi;
};

}  // namespace

UniformSelection select_uniform_subsequence(std::span<const double> T, double L,
                                            std::size_t m_per_interval, double h,
                                            std::size_t start_n, bool adaptive_start) {
  if (!(L > 0.0) || m_per_interval == 0) {
    throw PreconditionError("selection needs L > 0 and at least one point per block");
  }
  const double ell = L / static_cast<double>(m_per_interval);
  if (!(h > 0.0) || !(h < ell)) {
    throw PreconditionError("infeasible selection parameters: need 0 < h < L / m");
  }
  if (T.size() < 2) throw PreconditionError("selection needs at least two candidate points");
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (!(T[i] > 0.0) || (i > 0 && !(T[i] > T[i - 1]))) {
      throw PreconditionError("candidate set must be positive and strictly increasing");
    }
  }
  const double last_slot = static_cast<double>(m_per_interval - 1) * ell + h;
  if (T.back() < last_slot) throw PreconditionError("candidate set too short for one block");
  const auto n_max = static_cast<std::size_t>(std::floor((T.back() - last_slot) / L));
  if (start_n > n_max) throw PreconditionError("start block lies beyond the candidate set");

  std::vector<std::pair<std::size_t, std::size_t>> picks;  // (block, index into T)
  std::optional<Window> first_empty;
  std::optional<std::size_t> last_empty_block;
  for (std::size_t n = start_n; n <= n_max; ++n) {
    for (std::size_t s = 0; s < m_per_interval; ++s) {
      const double lo = static_cast<double>(n) * L + static_cast<double>(s) * ell;
      const double hi = lo + h;
      const auto it = std::lower_bound(T.begin(), T.end(), lo);
      if (it != T.end() && *it <= hi) {
        picks.emplace_back(n, static_cast<std::size_t>(it - T.begin()));
      } else {
        if (!first_empty) first_empty = Window{n, s, lo, hi};
        last_empty_block = n;
      }
    }
  }
  std::size_t effective_start = start_n;
  if (first_empty) {
    if (!adaptive_start || *last_empty_block + 2 > n_max) {
      throw WindowEmptyError(first_empty->n, first_empty->s, first_empty->lo, first_empty->hi);
    }
    effective_start = *last_empty_block + 1;
  }

  UniformSelection sel;
  sel.L = L;
  sel.m_per_interval = m_per_interval;
  sel.h = h;
  sel.ell = ell;
  sel.start_n = effective_start;
  for (const auto& [n, idx] : picks) {
    if (n < effective_start) continue;
    sel.t_prime.push_back(T[idx]);
    sel.source_index.push_back(idx);
  }
  return sel;
}

bool selection_invariants_hold(const UniformSelection& sel) {
  const std::size_t m = sel.m_per_interval;
  if (m == 0 || sel.t_prime.size() % m != 0 || !(sel.h > 0.0) || !(sel.h < sel.ell)) return false;
  const std::size_t blocks = sel.t_prime.size() / m;
  for (std::size_t b = 0; b < blocks; ++b) {
    const double n = static_cast<double>(sel.start_n + b);
    const double block_lo = n * sel.L;
    for (std::size_t s = 0; s < m; ++s) {
      const double t = sel.t_prime[b * m + s];
      const double lo = block_lo + static_cast<double>(s) * sel.ell;
      if (t < lo || t > lo + sel.h) return false;
      if (t < block_lo || t >= block_lo + sel.L) return false;
    }
  }
  for (std::size_t i = 1; i < sel.t_prime.size(); ++i) {
    if (sel.t_prime[i] - sel.t_prime[i - 1] < sel.ell - sel.h - 1e-12 * sel.t_prime[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace uniqlab::interpolation
