#include "uniqlab/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "uniqlab/errors.hpp"
#include "uniqlab/numerics.hpp"

namespace uniqlab::interpolation {

namespace {

complex log_shifted_beurling(std::span<const double> t, std::size_t idx, complex z,
                             std::size_t n_trunc) {
  const double tp = t[idx];
  long double log_abs = 0.0L;
  long double arg = 0.0L;
  auto accumulate = [&](double gamma) {
    const double d = gamma - tp;
    const complex f = (d - z) / d;
    log_abs += 0.5L * std::log(static_cast<long double>(std::norm(f)));
    arg += std::atan2(f.imag(), f.real());
  };
  for (std::size_t n = 0; n < n_trunc; ++n) {
    if (n != idx) accumulate(t[n]);
    accumulate(-t[n]);
  }
  return {static_cast<double>(log_abs), static_cast<double>(arg)};
}

double distance_to_zeros(std::span<const double> t, std::size_t n_trunc, complex z) {
  const double x = std::abs(z.real());
  const auto end = t.begin() + static_cast<std::ptrdiff_t>(n_trunc);
  const auto it = std::lower_bound(t.begin(), end, x);
  double dx = std::numeric_limits<double>::infinity();
  if (it != end) dx = std::min(dx, *it - x);
  if (it != t.begin()) dx = std::min(dx, x - *std::prev(it));
  return std::hypot(dx, z.imag());
}

bool is_arithmetic(std::span<const double> t) {
  const double s = t[0];
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (std::abs(t[k] - s * static_cast<double>(k + 1)) > 1e-12 * t[k]) return false;
  }
  return true;
}

products::ProductModel make_product(const UniformSelection& sel, const InterpolantOptions& opt) {
  if (sel.t_prime.empty()) throw PreconditionError("selection is empty");
  const std::size_t n = opt.n_trunc == 0 ? sel.t_prime.size() : opt.n_trunc;
  if (n > sel.t_prime.size()) throw PreconditionError("n_trunc exceeds the selected nodes");
  if (opt.analytic_tail && is_arithmetic(sel.t_prime)) {
    return products::ProductModel(products::ZeroSet::arithmetic(sel.t_prime[0], n), n,
                                  products::TailMode::analytic);
  }
  return products::ProductModel(products::ZeroSet(sel.t_prime), n);
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) {
    v[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(count - 1));
  }
  return v;
}

}  // namespace

complex shifted_beurling_product(const UniformSelection& sel, std::size_t t_prime_idx, complex z,
                                 std::size_t n_trunc) {
  if (t_prime_idx >= sel.t_prime.size()) throw PreconditionError("node index out of range");
  if (n_trunc < kMinBeurlingTerms || n_trunc > sel.t_prime.size()) {
    throw PreconditionError("shifted product needs at least 1000 stored nodes per side");
  }
  if (t_prime_idx >= n_trunc) throw PreconditionError("node index beyond the truncation");
  if (z == complex(0.0, 0.0)) return 1.0;
  return std::exp(log_shifted_beurling(sel.t_prime, t_prime_idx, z, n_trunc));
}

BeurlingGrowth beurling_growth_diagnostic(const UniformSelection& sel, std::size_t t_prime_idx,
                                          double nu, std::span<const double> radii,
                                          std::size_t n_angles, std::size_t n_trunc) {
  const double critical = static_cast<double>(sel.m_per_interval) / sel.L;
  if (!(nu > critical)) throw PreconditionError("growth diagnostic needs nu > m / L");
  if (n_angles < 2) throw PreconditionError("growth diagnostic needs at least two angles");
  // Validates index and truncation.
  (void)shifted_beurling_product(sel, t_prime_idx, complex(0.0, 0.0), n_trunc);
  BeurlingGrowth g;
  g.nu = nu;
  g.radii.assign(radii.begin(), radii.end());
  g.log_shell_max.assign(radii.size(), -std::numeric_limits<double>::infinity());
  const double poly = 5.0 * static_cast<double>(sel.m_per_interval);
  double best = -std::numeric_limits<double>::infinity();
  parallel_for(radii.size(), [&](std::size_t i) {
    const double r = radii[i];
    for (std::size_t k = 0; k < n_angles; ++k) {
      const double ang = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n_angles);
      const complex z = std::polar(r, ang);
      const double v = log_shifted_beurling(sel.t_prime, t_prime_idx, z, n_trunc).real() -
                       kPi * nu * std::abs(z.imag());
      g.log_shell_max[i] = std::max(g.log_shell_max[i], v);
    }
  });
  for (std::size_t i = 0; i < radii.size(); ++i) {
    best = std::max(best, g.log_shell_max[i] - poly * std::log1p(radii[i]));
  }
  g.max_ratio = std::exp(best);
  return g;
}

products::DerivativeAtNode product_derivative_at_node(const products::ProductModel& product,
                                                      double t_k) {
  const auto idx = product.zeros().index_of(t_k);
  if (!idx || *idx >= product.n_trunc()) {
    throw PreconditionError("node is not a zero of the truncated product");
  }
  return product.derivative_at(*idx);
}

EnvelopeFit lower_envelope_fit(std::span<const double> nodes,
                               std::span<const double> abs_derivatives) {
  if (nodes.size() != abs_derivatives.size() || nodes.size() < 2) {
    throw PreconditionError("envelope fit needs at least two (node, |Pi'|) pairs");
  }
  std::vector<std::pair<double, double>> pts(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!(nodes[i] > -1.0) || !(abs_derivatives[i] > 0.0)) {
      throw PreconditionError("envelope fit needs t > -1 and |Pi'(t)| > 0");
    }
    pts[i] = {std::log1p(nodes[i]), std::log(abs_derivatives[i])};
  }
  std::sort(pts.begin(), pts.end());
  if (pts.front().first == pts.back().first) {
    throw PreconditionError("degenerate envelope fit: all nodes coincide");
  }
  // Monotone-chain lower hull.
  std::vector<std::pair<double, double>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      const double cross =
          (b.first - a.first) * (p.second - a.second) - (b.second - a.second) * (p.first - a.first);
      if (cross > 0.0) break;
      hull.pop_back();
    }
    if (!hull.empty() && hull.back().first == p.first) continue;
    hull.push_back(p);
  }
  std::vector<double> hx;
  std::vector<double> hy;
  for (const auto& [x, y] : hull) {
    hx.push_back(x);
    hy.push_back(y);
  }
  const double slope = hull.size() >= 2 ? fit_line(hx, hy).slope : 0.0;
  double c = std::numeric_limits<double>::infinity();
  for (const auto& [x, y] : pts) c = std::min(c, y - slope * x);
  EnvelopeFit fit;
  fit.K0_fit = -slope;
  fit.C_fit = std::exp(c);
  for (const auto& [x, y] : pts) {
    if (y < slope * x + c - 1e-12 * (1.0 + std::abs(y))) ++fit.violations;
  }
  return fit;
}

InterpolantModel::InterpolantModel(UniformSelection selection, std::vector<complex> eta,
                                   InterpolantOptions options)
    : selection_(std::move(selection)),
      eta_(std::move(eta)),
      options_(options),
      product_(make_product(selection_, options)) {
  n_terms_ = options_.n_terms;
  if (n_terms_ < 2 || n_terms_ > product_.n_trunc()) {
    throw PreconditionError("n_terms must lie between 2 and the product truncation");
  }
  if (eta_.size() < n_terms_) throw PreconditionError("need one datum per series term");
  const double critical = static_cast<double>(selection_.m_per_interval) / selection_.L;
  nu_ = options_.nu.value_or(1.2 * critical);
  if (!(nu_ > critical)) throw PreconditionError("nu must exceed m / L");

  const auto& t = selection_.t_prime;
  d_pi_.resize(n_terms_);
  parallel_for(n_terms_, [&](std::size_t k) {
    d_pi_[k] = product_.derivative_at(k).value;
    if (d_pi_[k] == 0.0 || !std::isfinite(d_pi_[k])) {
      throw NumericalError("Pi'(t_k) vanished or overflowed");
    }
  });
  std::vector<double> abs_d(n_terms_);
  for (std::size_t k = 0; k < n_terms_; ++k) abs_d[k] = std::abs(d_pi_[k]);
  envelope_ = lower_envelope_fit(std::span(t).first(n_terms_), abs_d);

  // N0: growth exponent of |B_{t'}(z)| e^{-pi nu |Im z|} on a few nodes.
  if (product_.n_trunc() >= kMinBeurlingTerms) {
    const double r_top = std::min(100.0, t[product_.n_trunc() - 1] / 4.0);
    const auto radii = log_spaced(1.0, r_top, 16);
    std::vector<double> lx(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) lx[i] = std::log1p(radii[i]);
    double n0 = 0.0;
    for (std::size_t idx : {std::size_t{0}, n_terms_ / 2, n_terms_ - 1}) {
      const auto g =
          beurling_growth_diagnostic(selection_, idx, nu_, radii, 12, product_.n_trunc());
      n0 = std::max(n0, fit_line(lx, g.log_shell_max).slope);
    }
    N0_fit_ = n0;
  }

  const double need = std::max(envelope_.K0_fit, N0_fit_);
  K_ = options_.K.value_or(static_cast<int>(std::ceil(need)) + 3);
  if (!(static_cast<double>(K_) > need + 2.0)) {
    throw PreconditionError("weight exponent K must exceed max(K0, N0) + 2");
  }

  coef_.resize(n_terms_);
  double total = 0.0;
  double last_block = 0.0;
  const std::size_t block = std::max<std::size_t>(1, selection_.m_per_interval);
  for (std::size_t k = 0; k < n_terms_; ++k) {
    coef_[k] = 1.0 / (std::pow(1.0 + t[k], K_) * d_pi_[k]);
    const double w = std::pow(1.0 + t[k], envelope_.K0_fit - K_);
    total += w;
    if (k + block >= n_terms_) last_block += w;
  }
  series_tail_ratio_ = last_block / total;
}

InterpolantModel InterpolantModel::with_data(std::vector<complex> eta) const {
  InterpolantOptions opts = options_;
  opts.K = K_;
  return InterpolantModel(selection_, std::move(eta), opts);
}

nlohmann::json InterpolantModel::to_json() const {
  nlohmann::json j;
  j["selection"] = {{"L", selection_.L},
                    {"m_per_interval", selection_.m_per_interval},
                    {"h", selection_.h},
                    {"ell", selection_.ell},
                    {"start_n", selection_.start_n}};
  j["K"] = K_;
  j["K0_fit"] = envelope_.K0_fit;
  j["N0_fit"] = N0_fit_;
  j["C_fit"] = envelope_.C_fit;
  j["nu"] = nu_;
  j["n_terms"] = n_terms_;
  j["n_trunc"] = product_.n_trunc();
  std::vector<double> nodes(selection_.t_prime.begin(),
                            selection_.t_prime.begin() + static_cast<std::ptrdiff_t>(n_terms_));
  std::vector<double> re(n_terms_);
  std::vector<double> im(n_terms_);
  for (std::size_t k = 0; k < n_terms_; ++k) {
    re[k] = eta_[k].real();
    im[k] = eta_[k].imag();
  }
  j["nodes"] = nodes;
  j["eta_re"] = re;
  j["eta_im"] = im;
  j["d_pi"] = d_pi_;
  return j;
}

EnvelopeFit derivative_lower_bound_fit(const InterpolantModel& model) {
  if (model.n_terms() < 2) throw PreconditionError("envelope fit needs at least two nodes");
  std::vector<double> abs_d(model.d_pi().size());
  std::transform(model.d_pi().begin(), model.d_pi().end(), abs_d.begin(),
                 [](double v) { return std::abs(v); });
  return lower_envelope_fit(std::span(model.selection().t_prime).first(model.n_terms()), abs_d);
}

InterpolantValue interpolant_eval(const InterpolantModel& model, complex z) {
  const auto& t = model.selection().t_prime;
  const std::size_t n = model.n_terms();
  const int K = model.K();

  // Node within the removable radius: evaluate that term through B_{t_j}(z - t_j).
  std::optional<std::size_t> near;
  {
    const auto end = t.begin() + static_cast<std::ptrdiff_t>(n);
    const auto it = std::lower_bound(t.begin(), end, z.real());
    for (auto cand : {it, it == t.begin() ? it : std::prev(it)}) {
      if (cand != end && std::abs(z - *cand) < kRemovableRadius) {
        near = static_cast<std::size_t>(cand - t.begin());
      }
    }
  }

  const auto pi = model.product().eval(z);
  const complex lead = std::pow(1.0 + z, K) * pi.value;
  complex sum(0.0, 0.0);
  complex tail(0.0, 0.0);
  const std::size_t block = std::max<std::size_t>(1, model.selection().m_per_interval);
  const auto& eta = model.eta();
  // coef_k = 1 / ((1+t_k)^K Pi'(t_k)); recomputed from d_pi to keep the model header lean.
  for (std::size_t k = 0; k < n; ++k) {
    if (near && k == *near) continue;
    if (eta[k] == complex(0.0, 0.0)) continue;
    const complex term =
        eta[k] / (std::pow(1.0 + t[k], K) * model.d_pi()[k] * (z - t[k]));
    sum += term;
    if (k + block >= n) tail += term;
  }
  InterpolantValue out;
  out.value = lead * sum;
  out.truncation = std::abs(lead * tail);
  if (near) {
    const std::size_t j = *near;
    const complex w = std::pow((1.0 + z) / (1.0 + t[j]), K);
    const complex b = z == t[j] ? complex(1.0, 0.0)
                                : std::exp(log_shifted_beurling(t, j, z - t[j],
                                                                model.product().n_trunc()));
    out.value += w * b * eta[j];
  }
  return out;
}

InterpolationReport verify_interpolation(const InterpolantModel& model, double tol,
                                         std::size_t n_check) {
  const std::size_t n = std::min(n_check, model.n_terms());
  InterpolationReport rep;
  rep.rows.resize(n);
  parallel_for(n, [&](std::size_t k) {
    const double node = model.selection().t_prime[k];
    const complex g = interpolant_eval(model, complex(node, 0.0)).value;
    rep.rows[k] = {node, model.eta()[k], g, std::abs(g - model.eta()[k])};
  });
  for (const auto& row : rep.rows) rep.max_residual = std::max(rep.max_residual, row.residual);
  rep.pass = rep.max_residual <= tol;
  return rep;
}

GrowthReport verify_growth_bounds(const InterpolantModel& model, std::span<const double> radii,
                                  std::span<const double> angles,
                                  std::span<const double> real_grid) {
  const auto& sel = model.selection();
  const auto& t = sel.t_prime;
  const std::size_t n_trunc = model.product().n_trunc();
  const double delta_min = 0.05 * (sel.ell - sel.h);
  const int K = model.K();
  for (double a : angles) {
    if (!(std::abs(a) < kPi / 2.0)) throw PreconditionError("sector angles must satisfy |theta| < pi/2");
  }
  GrowthReport rep;
  rep.radii.assign(radii.begin(), radii.end());
  rep.ratio_by_radius.assign(radii.size(), 0.0);
  parallel_for(radii.size(), [&](std::size_t i) {
    const double r = radii[i];
    for (double a : angles) {
      const complex z = std::polar(r, a);
      const double delta = distance_to_zeros(t, n_trunc, z);
      if (delta < delta_min) throw PreconditionError("growth grid touches a zero of Pi");
      const double g = std::abs(interpolant_eval(model, z).value);
      const double pi = std::abs(model.product().eval(z).value);
      const double ratio = g * delta / (std::pow(1.0 + r, K) * pi);
      rep.ratio_by_radius[i] = std::max(rep.ratio_by_radius[i], ratio);
    }
  });
  for (double v : rep.ratio_by_radius) rep.sector_ratio_max = std::max(rep.sector_ratio_max, v);

  std::vector<double> lx;
  std::vector<double> ly;
  // Outer half only: the ratio settles toward its limit from below at small r.
  for (std::size_t i = radii.size() / 2; i < radii.size(); ++i) {
    if (rep.ratio_by_radius[i] > 0.0) {
      lx.push_back(std::log1p(radii[i]));
      ly.push_back(std::log(rep.ratio_by_radius[i]));
    }
  }
  rep.sector_trend = lx.size() >= 2 ? fit_line(lx, ly).slope : 0.0;

  // Real axis: upper envelope of log|g| over log-spaced shells in |x|.
  std::vector<double> xs;
  std::vector<double> vals;
  for (double x : real_grid) {
    if (distance_to_zeros(t, n_trunc, complex(x, 0.0)) < delta_min) {
      throw PreconditionError("real grid touches a zero of Pi");
    }
    xs.push_back(std::abs(x));
    vals.push_back(std::log(std::abs(interpolant_eval(model, complex(x, 0.0)).value)));
  }
  rep.real_exponent_bound = static_cast<double>(K) + model.N0_fit();
  rep.real_exponent_fit = -std::numeric_limits<double>::infinity();
  if (!xs.empty()) {
    const double lo = std::max(1.0, *std::min_element(xs.begin(), xs.end()));
    const double hi = *std::max_element(xs.begin(), xs.end());
    constexpr std::size_t kShells = 16;
    std::vector<double> best(kShells, -std::numeric_limits<double>::infinity());
    std::vector<double> at(kShells, 0.0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (xs[i] < lo || !std::isfinite(vals[i]) || hi <= lo) continue;
      auto s = static_cast<std::size_t>(kShells * std::log(xs[i] / lo) / std::log(hi / lo));
      s = std::min(s, kShells - 1);
      if (vals[i] > best[s]) {
        best[s] = vals[i];
        at[s] = xs[i];
      }
    }
    std::vector<double> fx;
    std::vector<double> fy;
    for (std::size_t s = 0; s < kShells; ++s) {
      if (std::isfinite(best[s])) {
        fx.push_back(std::log1p(at[s]));
        fy.push_back(best[s]);
      }
    }
    if (fx.size() >= 2) rep.real_exponent_fit = fit_line(fx, fy).slope;
  }
  return rep;
}

}  // namespace uniqlab::interpolation
