#include <doctest.h>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "uniqlab/errors.hpp"
#include "uniqlab/numerics.hpp"

using namespace uniqlab;

TEST_CASE("conjugate exponents") {
  CHECK(conjugate_exponent(2.0) == doctest::Approx(2.0));
  CHECK(conjugate_exponent(4.0) == doctest::Approx(4.0 / 3.0));
  CHECK_THROWS_AS(conjugate_exponent(1.0), PreconditionError);
  CHECK_THROWS_AS(conjugate_exponent(0.5), PreconditionError);
  CHECK_NOTHROW(check_conjugate(3.0, 1.5));
  CHECK_THROWS_AS(check_conjugate(3.0, 1.6), PreconditionError);
}

TEST_CASE("least squares recovers an exact polynomial") {
  std::vector<double> design;
  std::vector<double> y;
  for (int i = 0; i < 10; ++i) {
    const double x = 1.0 + i;
    design.insert(design.end(), {1.0, x, x * x});
    y.push_back(2.0 - 3.0 * x + 0.5 * x * x);
  }
  const auto c = least_squares(design, 3, y);
  CHECK(c[0] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(c[1] == doctest::Approx(-3.0).epsilon(1e-10));
  CHECK(c[2] == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("line fit, median, spearman") {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{3, 5, 7, 9};
  const auto f = fit_line(x, y);
  CHECK(f.slope == doctest::Approx(2.0));
  CHECK(f.intercept == doctest::Approx(1.0));
  CHECK(median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
  CHECK(spearman(x, y) == doctest::Approx(1.0));
  const std::vector<double> down{9, 1, 0.5, -2};
  CHECK(spearman(x, down) == doctest::Approx(-1.0));
  // Ties get average ranks: ranks (1.5, 1.5, 3, 4) against (1, 2, 3, 4).
  const std::vector<double> tied{1, 1, 2, 3};
  CHECK(spearman(tied, x) == doctest::Approx(0.9486832980505138));
}

TEST_CASE("growth exponent of polynomial-like sequences") {
  std::vector<double> x;
  std::vector<double> v3;
  std::vector<double> v0;
  for (int i = 1; i <= 200; ++i) {
    const double t = 0.05 * i;
    x.push_back(t);
    v3.push_back(std::log(std::abs(8 * t * t * t - 12 * t)));  // cubic
    v0.push_back(std::log(2.0 + 1.0 / (1.0 + t)));
  }
  CHECK(growth_exponent(x, v3) == doctest::Approx(3.0).epsilon(0.02));
  CHECK(std::abs(growth_exponent(x, v0)) < 0.1);
}

TEST_CASE("parallel_for covers every index and rethrows") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(parallel_for(50,
                               [](std::size_t i) {
                                 if (i == 17) throw NumericalError("boom");
                               }),
                  NumericalError);
  CHECK(max_parallel_tasks() >= 1);
}

TEST_CASE("UNIQLAB_THREADS sets the worker limit") {
  setenv("UNIQLAB_THREADS", "1", 1);
  CHECK(max_parallel_tasks() == 1);
  // Force the threaded path even on a single-core host.
  setenv("UNIQLAB_THREADS", "4", 1);
  CHECK(max_parallel_tasks() == 4);
  std::atomic<int> sum{0};
  parallel_for(100, [&](std::size_t i) { sum += static_cast<int>(i); });
  CHECK(sum == 4950);
  CHECK_THROWS_AS(parallel_for(40,
                               [](std::size_t i) {
                                 if (i == 3) throw PreconditionError("bad");
                               }),
                  PreconditionError);
  setenv("UNIQLAB_THREADS", "zero", 1);
  CHECK(max_parallel_tasks() >= 1);
  unsetenv("UNIQLAB_THREADS");
}
