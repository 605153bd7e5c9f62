#include "commands.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <set>

#include "uniqlab/errors.hpp"
#include "uniqlab/function_handle.hpp"
#include "uniqlab/indicator.hpp"
#include "uniqlab/interpolation.hpp"
#include "uniqlab/jensen.hpp"
#include "uniqlab/numerics.hpp"
#include "uniqlab/pairs.hpp"
#include "uniqlab/products.hpp"
#include "uniqlab/uniqueness.hpp"

namespace uniqlab::cli {

namespace {

using nlohmann::json;
using complex = std::complex<double>;

// Typed, schema-checked access to a params object. Unknown keys are rejected by finish().
class Params {
 public:
  explicit Params(const json& j) : j_(j) {
    if (!j_.is_object()) throw PreconditionError("params must be a JSON object");
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  const json& raw(const std::string& key) {
    used_.insert(key);
    if (!j_.contains(key)) fail(key, "is required");
    return j_.at(key);
  }

  double number(const std::string& key, std::optional<double> fallback = std::nullopt) {
    if (!j_.contains(key)) {
      used_.insert(key);
      if (!fallback) fail(key, "is required");
      return *fallback;
    }
    const json& v = raw(key);
    if (!v.is_number()) fail(key, "must be a number");
    return v.get<double>();
  }

  double positive(const std::string& key, std::optional<double> fallback = std::nullopt) {
    const double v = number(key, fallback);
    if (!(v > 0.0)) fail(key, "must be positive");
    return v;
  }

  std::size_t count(const std::string& key, std::optional<std::size_t> fallback = std::nullopt) {
    if (!j_.contains(key)) {
      used_.insert(key);
      if (!fallback) fail(key, "is required");
      return *fallback;
    }
    const json& v = raw(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) fail(key, "must be a non-negative integer");
    return v.get<std::size_t>();
  }

  std::optional<double> optional_number(const std::string& key) {
    if (!j_.contains(key)) return std::nullopt;
    return number(key);
  }

  std::string text(const std::string& key, const std::string& fallback) {
    used_.insert(key);
    if (!j_.contains(key)) return fallback;
    if (!j_.at(key).is_string()) fail(key, "must be a string");
    return j_.at(key).get<std::string>();
  }

  std::vector<double> numbers(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_array()) fail(key, "must be an array of numbers");
    std::vector<double> out;
    for (const auto& e : v) {
      if (!e.is_number()) fail(key, "must be an array of numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!used_.count(key)) throw PreconditionError("params: unknown key '" + key + "'");
    }
  }

  [[noreturn]] static void fail(const std::string& key, const std::string& what) {
    throw PreconditionError("params." + key + " " + what);
  }

 private:
  const json& j_;
  std::set<std::string> used_;
};

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count == 0) return {};
  if (count == 1) return {lo};
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) {
    v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return v;
}

std::vector<double> arithmetic_points(double spacing, std::size_t count) {
  std::vector<double> v(count);
  for (std::size_t n = 1; n <= count; ++n) v[n - 1] = spacing * static_cast<double>(n);
  return v;
}

// Grid from an explicit array `key`, or from key_min / key_max / key_count.
std::vector<double> grid(Params& p, const std::string& key, double lo, double hi,
                         std::size_t count) {
  if (p.has(key)) return p.numbers(key);
  const double a = p.number(key + "_min", lo);
  const double b = p.number(key + "_max", hi);
  const std::size_t n = p.count(key + "_count", count);
  if (!(b >= a)) Params::fail(key + "_max", "must be >= " + key + "_min");
  return linspace(a, b, n);
}

// {"kind":"arithmetic","spacing":s,"count":n} or {"kind":"list","values":[...]}.
std::vector<double> point_set(Params& p, const std::string& key, double spacing,
                              std::size_t count, std::optional<double>* arithmetic) {
  if (!p.has(key)) {
    if (arithmetic) *arithmetic = spacing;
    return arithmetic_points(spacing, count);
  }
  Params sub(p.raw(key));
  const std::string kind = sub.text("kind", "arithmetic");
  std::vector<double> out;
  if (kind == "arithmetic") {
    const double s = sub.positive("spacing", spacing);
    const std::size_t n = sub.count("count", count);
    if (n == 0) Params::fail(key + ".count", "must be positive");
    if (arithmetic) *arithmetic = s;
    out = arithmetic_points(s, n);
  } else if (kind == "list") {
    out = sub.numbers("values");
  } else {
    Params::fail(key + ".kind", "must be 'arithmetic' or 'list'");
  }
  sub.finish();
  return out;
}

products::ZeroSet zero_set(Params& p, const std::string& key, double spacing, std::size_t count) {
  std::optional<double> arith;
  auto pts = point_set(p, key, spacing, count, &arith);
  if (arith) return products::ZeroSet::arithmetic(*arith, pts.size());
  return products::ZeroSet(std::move(pts));
}

complex complex_value(const json& v, const std::string& key) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  Params::fail(key, "entries must be numbers or [re, im] pairs");
}

std::size_t lattice_extent(double p, double alpha, double R) {
  return static_cast<std::size_t>(std::ceil(std::pow(R, p) / (p * alpha))) + 2;
}

// Lattice (p, alpha) restricted to [-R, R].
pairs::SampleSequence truncated_lattice(double p, double alpha, double R) {
  const auto full = pairs::make_power_lattice(p, alpha, lattice_extent(p, alpha, R));
  std::vector<double> pts;
  std::vector<long> idx;
  for (std::size_t i = 0; i < full.size(); ++i) {
    if (std::abs(full.points()[i]) <= R) {
      pts.push_back(full.points()[i]);
      idx.push_back(full.indices()[i]);
    }
  }
  return pairs::SampleSequence(std::move(pts), pairs::Side::two_sided, full.generator(),
                               std::move(idx));
}

ResultTable table_with(std::vector<std::string> columns) {
  ResultTable t;
  t.columns = std::move(columns);
  return t;
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

// ---------------------------------------------------------------------------

ResultTable run_morgan(Params& p) {
  const double pp = p.number("p");
  p.finish();
  const double q = conjugate_exponent(pp);
  auto t = table_with({"p", "q", "r", "threshold"});
  t.add_row({pp, q, std::min(pp, q), pairs::morgan_threshold(pp, q)});
  return t;
}

ResultTable run_classify(Params& p) {
  const double pp = p.number("p");
  const double alpha = p.positive("alpha");
  const double beta = p.positive("beta");
  const std::size_t j_max = p.count("j_max", 10000);
  const std::size_t tail_start = p.count("tail_start", j_max / 2);
  const double shift = p.number("shift", 0.0);
  const double a = p.positive("a", 1.0);
  const double b = p.positive("b", 1.0);
  const double margin = p.number("margin", pairs::kDefaultVerdictMargin);
  p.finish();
  const double q = conjugate_exponent(pp);
  if (j_max < 2) Params::fail("j_max", "must be at least 2");
  auto spec = pairs::make_pair_spec(pairs::make_power_lattice(pp, alpha, j_max, shift),
                                    pairs::make_power_lattice(q, beta, j_max, shift), pp, a, b);
  const auto el = pairs::density_functional(spec.lambda, pp, tail_start);
  const auto em = pairs::density_functional(spec.mu, q, tail_start);
  const auto v = pairs::classify_pair(spec, el, em, margin);
  const auto bc = pairs::beurling_condition_check(spec, el, em);
  auto t = table_with({"verdict", "product", "upper_product", "lower_product", "alpha_upper",
                       "beta_upper", "beurling_pass"});
  t.add_row({pairs::to_string(v.kind), v.product_value, v.upper_product, v.lower_product,
             el.upper(), em.upper(), bc.pass});
  return t;
}

ResultTable run_product(Params& p, std::uint64_t seed) {
  const auto zeros = zero_set(p, "zeros", 1.0, 10000);
  const std::size_t n_trunc = p.count("n_trunc", zeros.size());
  const std::string tail = p.text("tail", zeros.spacing() ? "analytic" : "truncate");
  std::vector<complex> points;
  if (p.has("points")) {
    const json& arr = p.raw("points");
    if (!arr.is_array()) Params::fail("points", "must be an array");
    for (const auto& e : arr) points.push_back(complex_value(e, "points"));
  }
  const std::size_t n_random = p.count("random_points", points.empty() ? 200 : 0);
  const double radius = p.positive("radius", 10.0);
  p.finish();
  if (tail != "analytic" && tail != "truncate") Params::fail("tail", "must be 'analytic' or 'truncate'");
  const products::ProductModel model(
      zeros, n_trunc, tail == "analytic" ? products::TailMode::analytic : products::TailMode::truncate);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0; i < n_random; ++i) {
    const double r = radius * std::sqrt(unit(rng));
    points.push_back(std::polar(r, 2.0 * kPi * unit(rng)));
  }
  auto t = table_with({"re", "im", "value_re", "value_im", "log_abs", "log_abs_err_bound"});
  for (const auto& z : points) {
    const auto e = model.eval(z);
    t.add_row({z.real(), z.imag(), e.value.real(), e.value.imag(), e.log_value.real(),
               e.log_abs_err_bound});
  }
  t.meta["n_trunc"] = n_trunc;
  t.meta["validity_radius"] = model.validity_radius();
  return t;
}

ResultTable run_slope(Params& p) {
  const double spacing = p.positive("spacing", 1.0);
  const std::size_t count = p.count("count", 4096);
  const auto thetas = p.has("thetas") ? p.numbers("thetas")
                                      : std::vector<double>{kPi / 6, kPi / 4, kPi / 2};
  const auto radii = grid(p, "r", 50.0, 200.0, 31);
  p.finish();
  const products::ProductModel model(products::ZeroSet::arithmetic(spacing, count), count,
                                     products::TailMode::analytic);
  auto t = table_with({"theta", "slope", "expected", "rel_dev", "log_coefficient"});
  for (double th : thetas) {
    const auto f = products::asymptotic_slope_fit(model, th, radii);
    t.add_row({th, f.slope, f.expected, f.rel_dev, f.log_coefficient});
  }
  t.meta["density"] = 1.0 / spacing;
  return t;
}

ResultTable run_indicator(Params& p) {
  const auto f = products::FunctionHandle::from_registry(p.text("function", "gaussian"));
  const double rho = p.positive("rho", f.order().value_or(1.0));
  std::vector<double> thetas;
  if (p.has("thetas")) {
    thetas = p.numbers("thetas");
  } else {
    const std::size_t n = p.count("theta_count", 32);
    for (std::size_t i = 0; i < n; ++i) thetas.push_back(2.0 * kPi * static_cast<double>(i) / static_cast<double>(n));
  }
  const auto radii = grid(p, "r", 2.0, 20.0, 64);
  const auto kappa_hat = p.optional_number("kappa_hat");
  const double pp = p.number("p", 2.0);
  p.finish();
  const auto rep = products::indicator_estimate(f, rho, thetas, radii);
  std::vector<double> margins;
  if (kappa_hat) {
    if (!(*kappa_hat > 0.0)) Params::fail("kappa_hat", "must be positive");
    margins = products::kappa_estimate_bound_check(rep, pp, conjugate_exponent(pp), *kappa_hat);
  }
  auto t = table_with(kappa_hat ? std::vector<std::string>{"theta", "h_estimate", "residual", "margin"}
                                : std::vector<std::string>{"theta", "h_estimate", "residual"});
  for (std::size_t i = 0; i < rep.theta_grid.size(); ++i) {
    std::vector<Cell> row{rep.theta_grid[i], rep.h_estimates[i], rep.fit_residuals[i]};
    if (kappa_hat) row.emplace_back(margins[i]);
    t.add_row(std::move(row));
  }
  t.meta = rep.to_json();
  t.meta["function"] = f.metadata();
  return t;
}

ResultTable run_jensen(Params& p) {
  const auto f = products::FunctionHandle::from_registry(p.text("function", "sine_decay(1,1)"));
  const auto zeros = zero_set(p, "zeros", 0.5, 2000);
  products::JensenParams jp;
  jp.a = p.positive("a", jp.a);
  jp.delta = p.number("delta", jp.delta);
  jp.phi = p.positive("phi", jp.phi);
  jp.counting_constant = p.number("counting_constant", jp.counting_constant);
  jp.growth_constant = p.positive("growth_constant", jp.growth_constant);
  jp.fit_tolerance = p.number("fit_tolerance", jp.fit_tolerance);
  const auto xs = grid(p, "x", 0.01, 200.0, 4000);
  p.finish();
  if (jp.delta < 0.0) Params::fail("delta", "must be non-negative");
  if (!(jp.phi < kPi / 2.0)) Params::fail("phi", "must be below pi/2");
  const auto r = products::jensen_decay_check(f, zeros, jp, xs);
  auto t = table_with({"empirical_rate", "bound", "margin", "pass", "counting_ok", "growth_ok"});
  t.add_row({r.empirical_rate, r.bound, r.bound - r.empirical_rate, r.pass, r.counting_ok,
             r.growth_ok});
  t.meta["diagnostics"] = r.diagnostics;
  t.meta["worst_counting_slack"] = r.worst_counting_slack;
  t.meta["worst_growth_log"] = r.worst_growth_log;
  return t;
}

ResultTable run_interpolate(Params& p, std::uint64_t seed) {
  const auto T = point_set(p, "T", 1.0, 4010, nullptr);
  const double L = p.positive("L");
  const std::size_t m = p.count("m");
  const double h = p.positive("h");
  const std::size_t start_n = p.count("start_n", 0);
  interpolation::InterpolantOptions opt;
  opt.n_terms = p.count("n_terms", opt.n_terms);
  opt.n_trunc = p.count("n_trunc", 0);
  if (const auto k = p.optional_number("K")) {
    if (*k != std::floor(*k) || *k < 0) Params::fail("K", "must be a non-negative integer");
    opt.K = static_cast<int>(*k);
  }
  opt.nu = p.optional_number("nu");
  const std::size_t n_check = p.count("n_check", 20);
  const double tol = p.positive("tol", 1e-6);
  json eta_spec = p.has("eta") ? p.raw("eta") : json("ones");
  p.finish();
  if (m == 0) Params::fail("m", "must be positive");

  const auto sel = interpolation::select_uniform_subsequence(T, L, m, h, start_n);
  std::vector<complex> eta(sel.t_prime.size(), 0.0);
  if (eta_spec.is_string()) {
    const auto kind = eta_spec.get<std::string>();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (auto& e : eta) {
      if (kind == "ones") e = 1.0;
      else if (kind == "zeros") e = 0.0;
      else if (kind == "random") e = unit(rng);
      else Params::fail("eta", "must be 'ones', 'zeros', 'random' or an array");
    }
  } else if (eta_spec.is_array()) {
    if (eta_spec.size() > eta.size()) Params::fail("eta", "has more entries than selected nodes");
    for (std::size_t i = 0; i < eta_spec.size(); ++i) eta[i] = complex_value(eta_spec[i], "eta");
  } else {
    Params::fail("eta", "must be a string or an array");
  }

  const interpolation::InterpolantModel model(sel, std::move(eta), opt);
  const auto rep = interpolation::verify_interpolation(model, tol, n_check);
  auto t = table_with({"node", "eta_re", "eta_im", "g_re", "g_im", "residual"});
  for (const auto& row : rep.rows) {
    t.add_row({row.node, row.eta.real(), row.eta.imag(), row.g_value.real(), row.g_value.imag(),
               row.residual});
  }
  t.meta["K"] = model.K();
  t.meta["K0_fit"] = model.K0_fit();
  t.meta["N0_fit"] = model.N0_fit();
  t.meta["C_fit"] = model.C_fit();
  t.meta["nu"] = model.nu();
  t.meta["start_n"] = sel.start_n;
  t.meta["series_tail_ratio"] = model.series_tail_ratio();
  t.meta["max_residual"] = rep.max_residual;
  t.meta["pass"] = rep.pass;
  return t;
}

ResultTable run_scan(Params& p) {
  const double pp = p.number("p", 2.0);
  const auto alphas = grid(p, "alpha", 0.3, 0.7, 10);
  const std::size_t N = p.count("N", 40);
  const auto R = p.optional_number("R");
  p.finish();
  const auto s = uniqueness::uniqueness_scan(pp, alphas, N, R);
  auto t = table_with({"alpha", "sigma_min", "N", "R", "rows_lambda", "rows_mu"});
  for (std::size_t i = 0; i < s.alphas.size(); ++i) {
    t.add_row({s.alphas[i], s.sigma_min[i], as_int(s.N), s.R, as_int(s.rows_lambda[i]),
               as_int(s.rows_mu[i])});
  }
  if (s.alphas.size() >= 2) t.meta["spearman"] = spearman(s.alphas, s.sigma_min);
  return t;
}

ResultTable run_hardy(Params& p) {
  const double alpha = p.positive("alpha", 0.4);
  const double R = p.positive("R", 8.0);
  const std::size_t m_max = p.count("m_max", 10);
  const std::size_t n_max = p.count("N_max", 10);
  p.finish();
  const auto lattice = truncated_lattice(2.0, alpha, R);
  const uniqueness::HermiteBasis basis(m_max + 1);
  auto t = table_with({"m", "N", "fit_exponent", "bounded", "expected"});
  for (std::size_t m = 0; m <= m_max; ++m) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      const auto r = uniqueness::hardy_growth_test(basis, m, n, lattice);
      t.add_row({as_int(m), as_int(n), r.fit_exponent, r.bounded, m <= n});
    }
  }
  return t;
}

ResultTable run_transfer(Params& p) {
  std::optional<uniqueness::SpectralFunction> f;
  if (p.has("dilation")) {
    f = uniqueness::SpectralFunction::gaussian_dilation(p.positive("dilation"));
  }
  if (p.has("coefficients")) {
    if (f) Params::fail("coefficients", "cannot be combined with dilation");
    const json& arr = p.raw("coefficients");
    if (!arr.is_array() || arr.empty()) Params::fail("coefficients", "must be a nonempty array");
    std::vector<complex> c;
    for (const auto& e : arr) c.push_back(complex_value(e, "coefficients"));
    f = uniqueness::SpectralFunction::from_hermite(std::move(c));
  }
  const double pp = p.number("p", 2.0);
  const double alpha = p.positive("alpha", 0.4);
  const double beta = p.positive("beta", alpha);
  const double R = p.positive("R", 8.0);
  const double a = p.positive("a", 1.0);
  const double b = p.positive("b", 1.0);
  const double K = p.number("K", 0.0);
  const std::size_t tail_start = p.count("tail_start", 0);
  const auto xs = grid(p, "x", R / 200.0, R, 200);
  p.finish();
  if (!f) Params::fail("coefficients", "or dilation is required");
  const double q = conjugate_exponent(pp);
  const auto spec = pairs::make_pair_spec(truncated_lattice(pp, alpha, R),
                                          truncated_lattice(q, beta, R), pp, a, b, K);
  const auto r = uniqueness::decay_transfer_experiment(*f, spec, xs, xs, tail_start);
  auto t = table_with({"k_tilde", "hypothesis_holds", "exponent_lambda", "exponent_mu",
                       "exponent_real", "exponent_freq", "log_sup_lambda", "log_sup_mu",
                       "log_sup_real", "log_sup_freq"});
  t.add_row({r.k_tilde ? Cell{std::int64_t{*r.k_tilde}} : Cell{std::string("none")},
             r.hypothesis_holds, r.exponent_lambda, r.exponent_mu, r.exponent_real,
             r.exponent_freq, r.log_sup_lambda, r.log_sup_mu, r.log_sup_real, r.log_sup_freq});
  t.meta = {{"a", r.a}, {"b", r.b}, {"p", r.p}, {"q", r.q}, {"K", r.K},
            {"k_tilde_cap", uniqueness::kMaxKTilde}};
  return t;
}

ResultTable run_identities(Params& p, std::uint64_t seed) {
  const auto p_values = p.has("p_values") ? p.numbers("p_values")
                                          : std::vector<double>{1.2, 1.5, 2.0, 3.0, 5.0};
  const std::size_t theta_count = p.count("theta_count", 50);
  const std::size_t random_count = p.count("random_count", 1000);
  const std::size_t beurling_count = p.count("beurling_count", 100);
  p.finish();

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto t = table_with({"check", "samples", "worst", "pass"});

  double min_margin = std::numeric_limits<double>::infinity();
  std::size_t trig_n = 0;
  for (double pp : p_values) {
    std::vector<double> thetas;
    const double hi = kPi / (2.0 * pp);
    for (std::size_t i = 1; i <= theta_count; ++i) {
      thetas.push_back(hi * static_cast<double>(i) / static_cast<double>(theta_count + 1));
    }
    for (const auto& row : pairs::trig_inequality_check(pp, thetas)) {
      min_margin = std::min(min_margin, row.margin);
      ++trig_n;
    }
  }
  t.add_row({std::string("trig_margin"), as_int(trig_n), min_margin, min_margin > 0.0});

  double eta_worst = 0.0;
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < random_count; ++i) {
    const double pp = 1.05 + 5.0 * unit(rng);
    const double q = conjugate_exponent(pp);
    eta_worst = std::max(eta_worst, pairs::eta_substitution_check(0.05 + unit(rng), 0.05 + unit(rng), pp, q));
    // Half of the algebra samples sit within 1e-6 of the boundary 2 alpha^{1/p} beta^{1/q} = 1.
    const double alpha = 0.05 + unit(rng);
    double beta = 0.05 + unit(rng);
    if (i % 2 == 1) {
      const double target = 1.0 + 1e-6 * (2.0 * unit(rng) - 1.0);
      beta = std::pow(target / (2.0 * std::pow(alpha, 1.0 / pp)), q);
    }
    if (!pairs::criticality_algebra_check(alpha, beta, pp, q).equivalent) ++mismatches;
  }
  t.add_row({std::string("eta_substitution"), as_int(random_count), eta_worst, eta_worst <= 1e-12});
  t.add_row({std::string("criticality_algebra"), as_int(random_count),
             static_cast<double>(mismatches), mismatches == 0});

  double bp_worst = 0.0;
  const auto lattice = pairs::make_power_lattice(2.0, 0.25, 4);
  for (std::size_t i = 0; i < beurling_count; ++i) {
    const double pp = 1.05 + 5.0 * unit(rng);
    const double a = std::exp(4.0 * unit(rng) - 2.0);
    const double b = std::exp(4.0 * unit(rng) - 2.0);
    const auto spec = pairs::make_pair_spec(lattice, lattice, pp, a, b);
    const auto est = pairs::density_functional(lattice, pp, 0);
    const auto r = pairs::beurling_condition_check(spec, est, est);
    const double prod = std::pow(r.bound_lambda, 1.0 / spec.p) * std::pow(r.bound_mu, 1.0 / spec.q);
    bp_worst = std::max(bp_worst, std::abs(prod - 0.5));
  }
  t.add_row({std::string("beurling_bound_product"), as_int(beurling_count), bp_worst,
             bp_worst <= 1e-12});
  return t;
}

}  // namespace

ResultTable dispatch(const ExperimentConfig& config) {
  Params p(config.params);
  switch (config.command) {
    case Command::classify: return run_classify(p);
    case Command::product: return run_product(p, config.seed);
    case Command::slope: return run_slope(p);
    case Command::indicator: return run_indicator(p);
    case Command::jensen: return run_jensen(p);
    case Command::interpolate: return run_interpolate(p, config.seed);
    case Command::scan: return run_scan(p);
    case Command::hardy: return run_hardy(p);
    case Command::transfer: return run_transfer(p);
    case Command::morgan: return run_morgan(p);
    case Command::identities: return run_identities(p, config.seed);
  }
  throw PreconditionError("unknown command");
}

}  // namespace uniqlab::cli
