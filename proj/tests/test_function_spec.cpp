#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lipdist/error.hpp"
#include "lipdist/function_spec.hpp"

using namespace lipdist;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

GridFunction make(const char* text, int dim, int depth) { return synthesize(parse_function_spec(text), dim, depth); }

}  // namespace

TEST_CASE("trig samples match cos(2 pi k x + phase)") {
  const GridFunction f = make("trig k=3 a=0.5 phase=0.3", 1, 7);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = static_cast<double>(i) / 128.0;
    CHECK(f[i] == doctest::Approx(0.5 * std::cos(kTwoPi * 3.0 * x + 0.3)).epsilon(1e-13).scale(1.0));
  }
}

TEST_CASE("two-dimensional trig uses k.x") {
  const GridFunction f = make("trig k=1,2 a=1", 2, 4);
  for (long a = 0; a < 16; ++a)
    for (long b = 0; b < 16; ++b)
      CHECK(f.at(a, b) == doctest::Approx(std::cos(kTwoPi * (a + 2.0 * b) / 16.0)).epsilon(1e-13).scale(1.0));
}

TEST_CASE("Weierstrass series matches a direct sum") {
  const GridFunction f = make("weierstrass s=0.5 levels=6", 1, 8);
  for (std::size_t i = 0; i < f.size(); i += 7) {
    const double x = static_cast<double>(i) / 256.0;
    double sum = 0.0;
    for (int j = 0; j <= 6; ++j) sum += std::pow(2.0, -0.5 * j) * std::cos(kTwoPi * std::pow(2.0, j) * x);
    CHECK(f[i] == doctest::Approx(sum).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("random signs are seeded") {
  const GridFunction a = make("weierstrass s=1 levels=5 seed=4 signs=random", 1, 8);
  const GridFunction b = make("weierstrass s=1 levels=5 seed=4 signs=random", 1, 8);
  const GridFunction c = make("weierstrass s=1 levels=5 seed=5 signs=random", 1, 8);
  CHECK(sup_norm(a - b) == 0.0);
  CHECK(sup_norm(a - c) > 0.0);
}

TEST_CASE("sums add their terms") {
  const GridFunction s = make("sum trig k=1 a=1 + trig k=5 a=0.2", 1, 7);
  const GridFunction t = make("trig k=1 a=1", 1, 7) + make("trig k=5 a=0.2", 1, 7);
  CHECK(sup_norm(s - t) < 1e-15);
}

TEST_CASE("xlogx vanishes at the origin and is odd") {
  const GridFunction f = make("xlogx", 1, 8);
  CHECK(f[0] == 0.0);
  for (long i = 1; i < 128; ++i) CHECK(f.at(i) == doctest::Approx(-f.at(-i)).epsilon(1e-12).scale(1.0));
  const double x = 3.0 / 256.0;
  CHECK(f[3] == doctest::Approx(std::sin(kTwoPi * x) * std::log(std::sin(std::numbers::pi * x))).epsilon(1e-12));
}

TEST_CASE("syntax errors carry the offending offset") {
  try {
    parse_function_spec("trig k=1 a=");
    FAIL("expected a syntax error");
  } catch (const SpecSyntaxError& e) {
    CHECK(e.position() <= 11);
  }
  CHECK_THROWS_AS(parse_function_spec("nonsense"), SpecSyntaxError);
  CHECK_THROWS_AS(parse_function_spec("trig k=1 a=1 bogus=2"), SpecSyntaxError);
  CHECK_THROWS_AS(parse_function_spec(""), SpecSyntaxError);
}

TEST_CASE("out-of-range parameters are validation errors") {
  CHECK_THROWS_AS(parse_function_spec("weierstrass s=1.5 levels=3"), ValidationError);
  CHECK_THROWS_AS(make("trig k=64 a=1", 1, 7), ValidationError);
  CHECK_THROWS_AS(make("weierstrass s=1 levels=7", 1, 8), ValidationError);
  CHECK_THROWS_AS(make("wavelet-atom l=1 j=8 k=0", 1, 8), ValidationError);
}
