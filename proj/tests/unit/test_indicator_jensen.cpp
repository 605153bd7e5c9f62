#include <doctest.h>

#include <cmath>
#include <complex>

#include "uniqlab/errors.hpp"
#include "uniqlab/function_handle.hpp"
#include "uniqlab/indicator.hpp"
#include "uniqlab/jensen.hpp"
#include "uniqlab/numerics.hpp"

using namespace uniqlab;
using namespace uniqlab::products;
using cd = std::complex<double>;

namespace {

std::vector<double> theta_grid(std::size_t n) {
  std::vector<double> t;
  for (std::size_t i = 0; i < n; ++i) t.push_back(2 * kPi * static_cast<double>(i) / static_cast<double>(n));
  return t;
}

std::vector<double> range(double lo, double hi, std::size_t n) {
  std::vector<double> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
  return v;
}

ZeroSet lattice(double spacing, std::size_t count) { return ZeroSet::arithmetic(spacing, count); }

}  // namespace

TEST_CASE("function handles") {
  const auto g = FunctionHandle::gaussian();
  CHECK(std::abs(g(cd(0.3, 0.2)) - std::exp(-kPi * cd(0.3, 0.2) * cd(0.3, 0.2))) < 1e-15);
  CHECK(g.log_abs(cd(0, 40)) == doctest::Approx(kPi * 1600));
  CHECK(std::abs(FunctionHandle::sinc()(0.5) - 2 / kPi) < 1e-15);
  CHECK(FunctionHandle::from_registry("sine_decay(1,2)").name() == "sine_decay(1,2)");
  CHECK(FunctionHandle::from_registry("gaussian").order() == 2.0);
  CHECK(FunctionHandle::from_registry("sine(3)")(cd(1.0 / 6.0, 0)).real() == doctest::Approx(1.0));
  CHECK(FunctionHandle::constant(2.0).log_abs(cd(1e6, 1e6)) == doctest::Approx(std::log(2.0)));
  CHECK(FunctionHandle::from_registry("sinc").metadata()["name"] == "sinc");
  CHECK_THROWS_AS(FunctionHandle::from_registry("bessel"), PreconditionError);
  CHECK_THROWS_AS(FunctionHandle::from_registry("sine_decay(1)"), PreconditionError);
  const cd z(1.3, 0.8);
  CHECK(FunctionHandle::sinc()(z) == FunctionHandle::sinc()(z));
}

TEST_CASE("log|sin| is stable for large imaginary parts") {
  for (cd z : {cd(0.3, 0.1), cd(1.0, 5.0), cd(-2.0, 19.0), cd(0.7, -3.0)}) {
    CHECK(log_abs_sin(z) == doctest::Approx(std::log(std::abs(std::sin(z)))).epsilon(1e-12));
  }
  CHECK(log_abs_sin(cd(0.4, 800.0)) == doctest::Approx(800.0 - std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("gaussian indicator is -pi cos 2 theta") {
  const auto th = theta_grid(32);
  const auto rep = indicator_estimate(FunctionHandle::gaussian(), 2.0, th, range(2, 20, 64));
  for (std::size_t i = 0; i < th.size(); ++i) {
    CHECK(rep.h_estimates[i] == doctest::Approx(-kPi * std::cos(2 * th[i])).epsilon(1e-9));
  }
  CHECK(rep.h_zero == doctest::Approx(-kPi));
  CHECK(rep.kappa == doctest::Approx(0.5));
  const auto margins = kappa_estimate_bound_check(rep, 2.0, 2.0, 0.5);
  for (std::size_t i = 0; i < th.size(); ++i) {
    CHECK(margins[i] == doctest::Approx(kPi * (1 - std::pow(std::sin(th[i]), 2))).epsilon(1e-9));
    CHECK(margins[i] >= -1e-9);
  }
}

TEST_CASE("sine and constant indicators") {
  const auto th = theta_grid(16);
  const auto rep = indicator_estimate(FunctionHandle::sine(), 1.0, th, range(20, 200, 64));
  for (std::size_t i = 0; i < th.size(); ++i) {
    // log|sin(pi z)| / r = pi |sin theta| - log 2 / r + o(1) off the real axis.
    CHECK(std::abs(rep.h_estimates[i] - kPi * std::abs(std::sin(th[i]))) <= 0.05);
  }
  const auto c = indicator_estimate(FunctionHandle::constant(3.0), 1.5, th, range(10, 100, 16));
  for (double h : c.h_estimates) CHECK(std::abs(h) < 0.01);
  CHECK(std::abs(c.kappa) < 0.01);
  CHECK_THROWS_AS(indicator_estimate(FunctionHandle::sine(), 0.0, th, range(1, 2, 8)), PreconditionError);
}

TEST_CASE("indicator overflow is a per-ray diagnostic") {
  const FunctionHandle raw("raw_gaussian", [](cd z) { return std::exp(-kPi * z * z); });
  const std::vector<double> th{0.0, kPi / 2};
  const auto rep = indicator_estimate(raw, 2.0, th, range(2, 40, 32));
  CHECK(rep.overflow_counts[1] > 0);
  CHECK(rep.h_estimates[1] == doctest::Approx(kPi).epsilon(1e-6));
}

TEST_CASE("jensen decay on the sine-decay family") {
  const auto xs = range(0.01, 200, 4000);
  struct Case {
    double b, d, a, phi, rate;
  };
  for (const auto& c : {Case{1, 1, 1, kPi / 4, -kPi}, Case{1, 2, 1, kPi / 4, -2 * kPi},
                        Case{2, 1, 2, std::atan(0.5), -kPi}}) {
    JensenParams p;
    p.a = c.a;
    p.delta = 1.0;
    p.phi = c.phi;
    const auto r = jensen_decay_check(FunctionHandle::sine_decay(c.b, c.d), lattice(1 / (2 * c.b), 2000), p, xs);
    CHECK(r.bound == doctest::Approx(-2 * c.a * std::sin(c.phi)));
    CHECK(r.empirical_rate == doctest::Approx(c.rate).epsilon(0.01));
    CHECK(r.pass);
    CHECK(r.counting_ok);
    CHECK(r.growth_ok);
    CHECK(r.diagnostics.empty());
  }
}

TEST_CASE("jensen with zero excess density passes vacuously for bounded F") {
  JensenParams p;
  p.delta = 0.0;
  const auto r = jensen_decay_check(FunctionHandle::sine(2.0), lattice(0.5, 2000), p, range(0.01, 200, 4000));
  CHECK(r.bound == 0.0);
  CHECK(r.pass);
}

TEST_CASE("jensen hypothesis violations are reported") {
  JensenParams p;
  // Zeros too sparse for a(1 + delta) = 2 per unit length.
  const auto sparse = jensen_decay_check(FunctionHandle::sine_decay(1, 1), lattice(2.0, 500), p, range(0.01, 200, 4000));
  CHECK_FALSE(sparse.counting_ok);
  CHECK_FALSE(sparse.diagnostics.empty());
  // exp(-pi d z) with d < 0 grows too fast on the sector.
  const auto fast = jensen_decay_check(FunctionHandle::sine_decay(1, -3), lattice(0.5, 2000), p, range(0.01, 200, 4000));
  CHECK_FALSE(fast.growth_ok);
}

TEST_CASE("zero counts in windows") {
  std::vector<double> nat;
  for (int n = 1; n <= 100; ++n) nat.push_back(n);
  const ZeroSet n(nat);
  CHECK(zero_count_in_disk(n, 10.5, 3.0) == 6);
  CHECK(zero_count_in_disk(n, 10.5, 0.4) == 0);
  CHECK(zero_count_in_disk(lattice(0.5, 200), 20.0, 5.0) == 21);
  CHECK_THROWS_AS(zero_count_in_disk(n, 1.0, 0.0), PreconditionError);
}
