#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lipdist/function_spec.hpp"
#include "lipdist/poisson.hpp"

using namespace lipdist;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

GridFunction make(const std::string& text, int dim, int depth) {
  return synthesize(parse_function_spec(text), dim, depth);
}

// Poisson kernel of the circle summed in closed form:
// P_y(t) = sinh(2 pi y) / (cosh(2 pi y) - cos(2 pi t)).
double circle_kernel(double y, double t) {
  return std::sinh(kTwoPi * y) / (std::cosh(kTwoPi * y) - std::cos(kTwoPi * t));
}

}  // namespace

TEST_CASE("single modes decay like e^{-2 pi |k| y}") {
  for (int k : {1, 4}) {
    const GridFunction f = make("trig k=" + std::to_string(k) + " a=1 phase=0.7", 1, 9);
    for (double y : {0.01, 0.2}) {
      const double decay = std::exp(-kTwoPi * k * y), xi2 = std::pow(kTwoPi * k, 2);
      const GridFunction u = poisson_extend(f, y), d2 = d2y_extension(f, y);
      for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(u[i] == doctest::Approx(decay * f[i]).epsilon(1e-10).scale(1.0));
        CHECK(d2[i] / xi2 == doctest::Approx(decay * f[i]).epsilon(1e-10).scale(1.0));
      }
    }
  }
}

TEST_CASE("extension of a spike matches the closed-form Poisson kernel") {
  const int depth = 9;
  const std::size_t side = std::size_t{1} << depth;
  std::vector<double> spike(side, 0.0);
  spike[0] = 1.0;
  const double y = 0.05;
  const GridFunction u = poisson_extend(GridFunction(1, depth, spike), y);
  // The discrete extension is the kernel truncated to |k| <= side / 2, which
  // differs from the full kernel by about e^{-2 pi y side / 2}.
  for (std::size_t i = 0; i < side; i += 17)
    CHECK(u[i] * side == doctest::Approx(circle_kernel(y, double(i) / side)).epsilon(1e-9));
}

TEST_CASE("extension preserves the mean and positivity") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> v(256);
  for (double& x : v) x = unit(rng);
  const GridFunction f(1, 8, v);
  const GridFunction u = poisson_extend(f, 0.02);
  double mf = 0.0, mu = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mf += f[i];
    mu += u[i];
    CHECK(u[i] > 0.0);
  }
  CHECK(mu == doctest::Approx(mf).epsilon(1e-12));
}

TEST_CASE("extension is harmonic in two dimensions") {
  const GridFunction f = make("sum trig k=1,2 a=1 + trig k=3,0 a=0.5", 2, 6);
  const double y = 0.07;
  const GridFunction u = poisson_extend(f, y), d2 = d2y_extension(f, y);
  // Minus the Laplacian in x of each mode is (2 pi |k|)^2 times the mode.
  const GridFunction lap = apply_radial_multiplier(u, [](double k) { return std::pow(kTwoPi * k, 2); });
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(d2[i] == doctest::Approx(lap[i]).epsilon(1e-10).scale(1.0));
}

TEST_CASE("D is the threshold of the derivative field") {
  const GridFunction f = make("weierstrass s=1 levels=8", 1, 10);
  const CellField field = derivative_field(f, 1.0, 8);
  for (double eps : {0.0, 1.0, 5.0, 1e9}) CHECK(build_D(f, 1.0, eps, 8) == field.threshold(eps));
  CHECK(holder_poisson_norm(f, 1.0, 8) >= sup_norm(f) + field.max() * (1.0 - 1e-12));
}

TEST_CASE("derivative field of a single mode has the closed-form cell maximum bound") {
  const GridFunction f = make("trig k=1 a=1", 1, 10);
  const CellField field = derivative_field(f, 1.0, 8);
  // y |d^2u/dy^2| <= y (2 pi)^2 e^{-2 pi y}, maximized at y = 1 / (2 pi).
  const double bound = kTwoPi * std::exp(-1.0);
  CHECK(field.max() <= bound * (1.0 + 1e-12));
  CHECK(field.max() >= 0.5 * bound);
}

TEST_CASE("bmo norm of a cosine is its two equal L2 parts") {
  const GridFunction f = make("trig k=1 a=1", 1, 10);
  CHECK(bmo_norm(f, 10) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  const GridFunction c = make("trig k=0 a=-3", 1, 8);
  CHECK(bmo_norm(c, 8) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("direct Jbmo norm of a mode scales by the lift factor") {
  const GridFunction f = make("trig k=2 a=1", 1, 10);
  const double factor = std::pow(1.0 + std::pow(kTwoPi * 2.0, 2), 0.5 / 2.0);
  CHECK(jbmo_direct_norm(f, 0.5, 10) == doctest::Approx(std::sqrt(2.0) * factor).epsilon(1e-10));
}

TEST_CASE("Lipschitz ratios are finite and reproducible") {
  const GridFunction f = make("weierstrass s=0.5 levels=8", 1, 10);
  const LipschitzReport a = lipschitz_check(f, 0.5, 2000, 3);
  CHECK(std::isfinite(a.max_ratio));
  CHECK(a.max_ratio > 0.0);
  CHECK(lipschitz_check(f, 0.5, 2000, 3).max_ratio == a.max_ratio);
}
