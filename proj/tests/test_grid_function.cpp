#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "lipdist/error.hpp"
#include "lipdist/grid_function.hpp"

using namespace lipdist;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

GridFunction cosine(int depth, int k, double amplitude = 1.0) {
  std::vector<double> v(std::size_t{1} << depth);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = amplitude * std::cos(kTwoPi * k * static_cast<double>(i) / static_cast<double>(v.size()));
  return GridFunction(1, depth, std::move(v));
}

}  // namespace

TEST_CASE("spectral round trip reproduces samples") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  for (int dim : {1, 2}) {
    const int depth = dim == 1 ? 9 : 5;
    std::vector<double> v(std::size_t{1} << (dim * depth));
    for (double& x : v) x = normal(rng);
    const GridFunction f(dim, depth, v);
    const GridFunction g = from_spectral(to_spectral(f));
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(g[i] == doctest::Approx(f[i]).epsilon(1e-12));
  }
}

TEST_CASE("a cosine mode has coefficients a/2 at +-k") {
  const SpectralFunction F = to_spectral(cosine(8, 5, 3.0));
  CHECK(std::abs(F.coeff(5) - 1.5) < 1e-12);
  CHECK(std::abs(F.coeff(-5) - 1.5) < 1e-12);
  CHECK(std::abs(F.coeff(4)) < 1e-12);
  CHECK(std::abs(F.coeff(0)) < 1e-12);
}

TEST_CASE("Bessel lift scales a single mode by (1 + (2 pi k)^2)^(-r/2)") {
  for (double order : {0.5, 1.0, -1.0}) {
    const GridFunction f = cosine(8, 3);
    const GridFunction g = bessel_lift(f, order);
    const double factor = std::pow(1.0 + std::pow(kTwoPi * 3.0, 2), -order / 2.0);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(g[i] == doctest::Approx(factor * f[i]).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("Bessel lifts compose additively in the order") {
  const GridFunction f = cosine(8, 2) + cosine(8, 7, 0.3);
  const GridFunction a = bessel_lift(bessel_lift(f, 0.4), 0.6);
  const GridFunction b = bessel_lift(f, 1.0);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12).scale(1.0));
}

TEST_CASE("arithmetic, sup norm and periodic access") {
  std::vector<double> v(16, 0.0);
  v[1] = -4.0;
  v[2] = 2.0;
  v[15] = 0.5;
  const GridFunction f(1, 4, v);
  CHECK(sup_norm(f) == 4.0);
  CHECK(sup_norm(f.scaled(-2.0)) == 8.0);
  CHECK(f.at(17) == -4.0);
  CHECK(f.at(-1) == 0.5);
  const GridFunction z = f - f;
  CHECK(sup_norm(z) == 0.0);
}

TEST_CASE("mismatched sample count is rejected") {
  CHECK_THROWS_AS(GridFunction(1, 3, std::vector<double>(7, 0.0)), ValidationError);
}
