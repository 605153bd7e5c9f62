#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "uniqlab/errors.hpp"
#include "uniqlab/io.hpp"

using namespace uniqlab;

TEST_CASE("shortest round-trip formatting") {
  CHECK(io::format_double(0.5) == "0.5");
  CHECK(io::format_double(2.0) == "2");
  CHECK(io::format_double(-0.1) == "-0.1");
  CHECK(io::format_double(1e-10) == "1e-10");
  CHECK(io::format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(io::format_double(-std::numeric_limits<double>::infinity()) == "-inf");
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double v = std::exp(u(rng)) * (i % 2 ? -1 : 1);
    CHECK(std::stod(io::format_double(v)) == v);
  }
}

TEST_CASE("sequence CSV round trip") {
  const auto s = pairs::make_power_lattice(2.0, 0.25, 3);
  const auto text = io::sequence_to_csv(s);
  CHECK(text.rfind("j,lambda_j\n-3,", 0) == 0);
  CHECK(text.find("\r") == std::string::npos);
  const auto back = io::sequence_from_csv(text);
  REQUIRE(back.size() == s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(back.points()[i] == s.points()[i]);
    CHECK(back.indices()[i] == s.indices()[i]);
  }
  CHECK_THROWS_AS(io::sequence_from_csv("x,y\n1,2\n"), PreconditionError);
  CHECK_THROWS_AS(io::sequence_from_csv("j,lambda_j\n1;2\n"), PreconditionError);
}

TEST_CASE("generator JSON round trip") {
  const pairs::LatticeGenerator g{3.0, 0.5, 100, 0.25};
  const auto j = io::generator_to_json(g);
  CHECK(j["kind"] == "power_lattice");
  CHECK(j.dump() == R"({"alpha":0.5,"j_max":100,"kind":"power_lattice","p":3.0,"shift":0.25})");
  const auto back = io::generator_from_json(j);
  CHECK(back.p == 3.0);
  CHECK(back.alpha == 0.5);
  CHECK(back.j_max == 100);
  CHECK(back.shift == 0.25);
  CHECK_THROWS_AS(io::generator_from_json({{"kind", "other"}}), PreconditionError);
}
