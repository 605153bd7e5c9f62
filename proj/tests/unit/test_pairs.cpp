#include <doctest.h>

#include <cmath>
#include <random>

#include "uniqlab/errors.hpp"
#include "uniqlab/numerics.hpp"
#include "uniqlab/pairs.hpp"

using namespace uniqlab;
using namespace uniqlab::pairs;

namespace {

// Brute-force tail sup/inf of |x_j|^{p-1}(x_{j+1} - x_j) over the positive branch.
std::pair<double, double> brute_tail(const std::vector<double>& pos, double p, std::size_t start) {
  double hi = 0.0;
  double lo = 1e300;
  for (std::size_t k = start; k + 1 < pos.size(); ++k) {
    const double v = std::pow(pos[k], p - 1.0) * (pos[k + 1] - pos[k]);
    hi = std::max(hi, v);
    lo = std::min(lo, v);
  }
  return {hi, lo};
}

DensityEstimate flat_estimate(double upper, double lower) {
  DensityEstimate e;
  e.alpha_plus = e.alpha_minus = upper;
  e.lower_plus = e.lower_minus = lower;
  return e;
}

PairSpec small_spec(double p = 2.0, double a = 1.0, double b = 1.0) {
  const auto s = make_power_lattice(p, 0.25, 8);
  return make_pair_spec(s, s, p, a, b);
}

}  // namespace

TEST_CASE("power lattice closed form") {
  const auto s = make_power_lattice(2.0, 0.25, 10);
  REQUIRE(s.size() == 20);
  // Points ascend from j = -10 to j = 10, skipping 0.
  CHECK(s.points()[10] == doctest::Approx(std::sqrt(0.5)));
  CHECK(s.points()[17] == doctest::Approx(2.0));  // j = 8
  CHECK(s.indices()[17] == 8);
  for (std::size_t i = 0; i < 10; ++i) CHECK(s.points()[i] == -s.points()[19 - i]);
  CHECK_THROWS_AS(make_power_lattice(1.0, 0.25, 10), PreconditionError);
  CHECK_THROWS_AS(make_power_lattice(2.0, 0.0, 10), PreconditionError);
  CHECK_THROWS_AS(make_power_lattice(2.0, 0.25, 1), PreconditionError);
}

TEST_CASE("shifted lattice and branches") {
  const auto s = make_power_lattice(3.0, 0.5, 5, 0.1, Side::positive);
  CHECK(s.size() == 5);
  CHECK(s.points()[0] == doctest::Approx(std::cbrt(1.5) + 0.1));
  CHECK(s.negative_branch().empty());
  const auto t = make_power_lattice(2.0, 0.5, 4, 0.2);
  CHECK(t.points()[0] == doctest::Approx(-(2.0 + 0.2)));
  CHECK(t.negative_branch().front() == doctest::Approx(1.0 + 0.2));
  CHECK(t.truncated(1.5).size() == 2);  // only +-1.2 inside
}

TEST_CASE("sample sequences validate ordering") {
  CHECK_THROWS_AS(SampleSequence({1.0, 1.0}, Side::two_sided), PreconditionError);
  CHECK_THROWS_AS(SampleSequence({2.0, 1.0}, Side::two_sided), PreconditionError);
  CHECK_THROWS_AS(SampleSequence({-1.0, 1.0}, Side::positive), PreconditionError);
  CHECK_NOTHROW(SampleSequence({-1.0, 1.0}, Side::two_sided));
}

TEST_CASE("density functional matches brute-force differencing") {
  const auto s = make_power_lattice(2.0, 0.25, 10000);
  const auto e = density_functional(s, 2.0, 100);
  CHECK(e.alpha_plus >= 0.249);
  CHECK(e.alpha_plus <= 0.251);
  const auto [hi, lo] = brute_tail(s.positive_branch(), 2.0, 100);
  CHECK(e.alpha_plus == doctest::Approx(hi).epsilon(1e-12));
  CHECK(e.lower_plus == doctest::Approx(lo).epsilon(1e-12));
  CHECK(e.two_sided);
  CHECK(std::isfinite(e.alpha_minus));
}

TEST_CASE("density functional edge cases") {
  // Equispaced points with p = 2: the functional grows with the range.
  std::vector<double> pts;
  for (int j = 1; j <= 50; ++j) pts.push_back(j);
  const SampleSequence eq50(pts, Side::positive);
  for (int j = 51; j <= 200; ++j) pts.push_back(j);
  const SampleSequence eq200(pts, Side::positive);
  CHECK(density_functional(eq200, 2.0, 0).alpha_plus > density_functional(eq50, 2.0, 0).alpha_plus);
  CHECK(std::isnan(density_functional(eq50, 2.0, 0).alpha_minus));

  const SampleSequence two({1.5, 2.5}, Side::positive);
  CHECK(density_functional(two, 3.0, 0).alpha_plus == doctest::Approx(2.25));
  CHECK_THROWS_AS(density_functional(two, 2.0, 1), PreconditionError);
}

TEST_CASE("density functional converges for generated lattices (property)") {
  for (double p : {1.5, 2.0, 3.0}) {
    for (double alpha : {0.1, 0.25, 0.5}) {
      const auto s = make_power_lattice(p, alpha, 20000);
      const auto e = density_functional(s, p, 100);
      CHECK(std::abs(e.upper() - alpha) <= 0.01 * alpha);
      CHECK(std::abs(e.lower() - alpha) <= 0.01 * alpha);
    }
  }
}

TEST_CASE("refinement: a later tail start never raises the sup") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> gap(0.1, 1.0);
  std::vector<double> pts{0.5};
  for (int i = 0; i < 300; ++i) pts.push_back(pts.back() + gap(rng));
  const SampleSequence s(pts, Side::positive);
  double prev = 1e300;
  for (std::size_t start = 0; start < 290; start += 10) {
    const double v = density_functional(s, 1.7, start).alpha_plus;
    CHECK(v <= prev);
    prev = v;
  }
}

TEST_CASE("classification verdicts") {
  const auto spec = small_spec();
  const auto v1 = classify_pair(spec, flat_estimate(0.4, 0.4), flat_estimate(0.4, 0.4));
  CHECK(v1.kind == Criticality::supercritical);
  CHECK(v1.product_value == doctest::Approx(0.4));
  const auto v2 = classify_pair(spec, flat_estimate(0.6, 0.6), flat_estimate(0.6, 0.6));
  CHECK(v2.kind == Criticality::subcritical);
  CHECK(v2.product_value == doctest::Approx(0.6));
  const auto v3 = classify_pair(spec, flat_estimate(0.5, 0.5), flat_estimate(0.5, 0.5));
  CHECK(v3.kind == Criticality::indeterminate);
  CHECK(v3.product_value == doctest::Approx(0.5));
  CHECK(to_string(Criticality::supercritical) == "supercritical");
}

TEST_CASE("classification is monotone in the upper densities (property)") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  const auto spec = small_spec(2.5);
  auto rank = [](Criticality k) {
    return k == Criticality::supercritical ? 0 : k == Criticality::indeterminate ? 1 : 2;
  };
  for (int i = 0; i < 500; ++i) {
    const double lo_a = u(rng), lo_b = u(rng);
    const double hi_a = lo_a + u(rng), hi_b = lo_b + u(rng);
    const auto base = classify_pair(spec, flat_estimate(hi_a, lo_a), flat_estimate(hi_b, lo_b));
    const auto bigger =
        classify_pair(spec, flat_estimate(hi_a * 1.3, lo_a), flat_estimate(hi_b * 1.1, lo_b));
    CHECK(rank(bigger.kind) >= rank(base.kind));
  }
}

TEST_CASE("decay-transfer density condition") {
  const auto r1 = beurling_condition_check(small_spec(), flat_estimate(0.4, 0.4), flat_estimate(0.4, 0.4));
  CHECK(r1.bound_lambda == doctest::Approx(0.5));
  CHECK(r1.bound_mu == doctest::Approx(0.5));
  CHECK(r1.pass);
  const auto r2 = beurling_condition_check(small_spec(2.0, 1.0, 4.0), flat_estimate(0.4, 0.4),
                                           flat_estimate(0.4, 0.4));
  CHECK(r2.bound_lambda == doctest::Approx(1.0));
  CHECK(r2.bound_mu == doctest::Approx(0.25));
  CHECK_FALSE(r2.pass);
}

TEST_CASE("bound product is exactly one half (property)") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double p = 1.01 + 8.0 * u(rng);
    const auto spec = small_spec(p, std::exp(6 * u(rng) - 3), std::exp(6 * u(rng) - 3));
    const auto r = beurling_condition_check(spec, flat_estimate(0.1, 0.1), flat_estimate(0.1, 0.1));
    CHECK(std::abs(std::pow(r.bound_lambda, 1 / spec.p) * std::pow(r.bound_mu, 1 / spec.q) - 0.5) <=
          1e-12);
  }
}

TEST_CASE("morgan threshold") {
  CHECK(morgan_threshold(2.0, 2.0) == doctest::Approx(1.0));
  CHECK(morgan_threshold(4.0, 4.0 / 3.0) == doctest::Approx(std::pow(2.0, -0.75)));
  CHECK(morgan_threshold(4.0, 4.0 / 3.0) == doctest::Approx(0.5946035575));
  CHECK(morgan_threshold(1.0001, conjugate_exponent(1.0001)) < 1e-3);
  CHECK_THROWS_AS(morgan_threshold(2.0, 3.0), PreconditionError);
}

TEST_CASE("trig inequality values") {
  const std::vector<double> t1{kPi / 8};
  const auto r = trig_inequality_check(2.0, t1);
  CHECK(r[0].lhs == doctest::Approx(0.5));
  // sin(pi/8) / cos(pi/4)^{1/2} = 0.3826834 / 0.8408964
  CHECK(r[0].rhs == doctest::Approx(0.455089860562).epsilon(1e-10));
  CHECK(r[0].margin > 0.04);
  const std::vector<double> t3{kPi / 12};
  const auto r3 = trig_inequality_check(3.0, t3);
  CHECK(r3[0].lhs == doctest::Approx(1.0 / 3.0));
  CHECK(r3[0].rhs == doctest::Approx(0.29051455550725).epsilon(1e-10));
  const std::vector<double> tiny{1e-6};
  const auto r0 = trig_inequality_check(2.0, tiny);
  CHECK(r0[0].lhs / r0[0].rhs == doctest::Approx(1.0).epsilon(1e-9));
  const std::vector<double> edge{kPi / 4};
  CHECK_THROWS_AS(trig_inequality_check(2.0, edge), PreconditionError);
  const std::vector<double> zero{0.0};
  CHECK_THROWS_AS(trig_inequality_check(2.0, zero), PreconditionError);
}

TEST_CASE("trig margins are positive on interior grids (property)") {
  for (double p : {1.2, 1.5, 2.0, 3.0, 5.0}) {
    std::vector<double> grid;
    for (int i = 1; i <= 50; ++i) grid.push_back(kPi / (2 * p) * i / 51.0);
    for (const auto& row : trig_inequality_check(p, grid)) CHECK(row.margin > 0.0);
  }
}

TEST_CASE("eta substitution") {
  CHECK(eta_substitution_check(0.4, 1.0, 2.0, 2.0) <= 1e-15);
  CHECK(eta_substitution_check(0.5, 0.5, 2.0, 2.0) <= 1e-12);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double p = 1.05 + 6.0 * u(rng);
    CHECK(eta_substitution_check(0.01 + 2 * u(rng), 0.01 + 2 * u(rng), p, conjugate_exponent(p)) <=
          1e-12);
  }
  CHECK_THROWS_AS(eta_substitution_check(-0.1, 1.0, 2.0, 2.0), PreconditionError);
}

TEST_CASE("criticality algebra") {
  const auto a = criticality_algebra_check(0.6, 0.6, 2.0, 2.0);
  CHECK(a.lhs_value == doctest::Approx(2.0736));
  CHECK(a.rhs_value == doctest::Approx(1.2));
  CHECK((a.lhs_holds && a.rhs_holds && a.equivalent));
  const auto b = criticality_algebra_check(0.4, 0.4, 2.0, 2.0);
  CHECK(b.lhs_value == doctest::Approx(0.4096));
  CHECK((!b.lhs_holds && !b.rhs_holds && b.equivalent));
  // Boundary alpha^{1/p} beta^{1/q} = 1/2: both sides equal 1.
  const auto c = criticality_algebra_check(0.5, 0.5, 2.0, 2.0);
  CHECK(c.lhs_value == doctest::Approx(1.0));
  CHECK(c.rhs_value == doctest::Approx(1.0));

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double p = 1.05 + 5.0 * u(rng);
    const double q = conjugate_exponent(p);
    const double alpha = 0.02 + u(rng);
    double beta = 0.02 + u(rng);
    if (i % 2) beta = std::pow((1.0 + 1e-7 * (2 * u(rng) - 1)) / (2 * std::pow(alpha, 1 / p)), q);
    CHECK(criticality_algebra_check(alpha, beta, p, q).equivalent);
  }
}

TEST_CASE("pair specs recompute q") {
  const auto s = make_power_lattice(2.0, 0.25, 4);
  const auto spec = make_pair_spec(s, s, 3.0);
  CHECK(spec.q == doctest::Approx(1.5));
  CHECK(std::abs(spec.p + spec.q - spec.p * spec.q) <= 1e-12);
  CHECK_THROWS_AS(make_pair_spec(s, s, 2.0, -1.0), PreconditionError);
  CHECK_THROWS_AS(make_pair_spec(s, s, 2.0, 1.0, 1.0, -1.0), PreconditionError);
}
