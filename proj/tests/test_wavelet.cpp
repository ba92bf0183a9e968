#include <doctest.h>

#include <cmath>
#include <random>

#include "lipdist/function_spec.hpp"
#include "lipdist/wavelet.hpp"

using namespace lipdist;

namespace {

GridFunction random_function(int dim, int depth, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<double> v(std::size_t{1} << (dim * depth));
  for (double& x : v) x = normal(rng);
  return GridFunction(dim, depth, std::move(v));
}

}  // namespace

TEST_CASE("Daubechies filters are orthonormal with p vanishing moments") {
  for (int p = 2; p <= 10; ++p) {
    const FilterBank bank = filter_bank(p);
    REQUIRE(bank.length() == static_cast<std::size_t>(2 * p));
    double sum = 0.0;
    for (double h : bank.low) sum += h;
    CHECK(sum == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    for (std::size_t shift = 0; shift < bank.length(); shift += 2) {
      double dot = 0.0;
      for (std::size_t k = 0; k + shift < bank.length(); ++k) dot += bank.low[k] * bank.low[k + shift];
      CHECK(dot == doctest::Approx(shift == 0 ? 1.0 : 0.0).epsilon(1e-12).scale(1.0));
    }
    for (int m = 0; m < p; ++m) {
      double moment = 0.0;
      for (std::size_t k = 0; k < bank.length(); ++k) moment += bank.high[k] * std::pow(double(k), m);
      CHECK(std::abs(moment) < 1e-9 * std::pow(double(bank.length()), m));
    }
  }
}

TEST_CASE("analysis and reconstruction are inverse in one and two dimensions") {
  for (int dim : {1, 2}) {
    const GridFunction f = random_function(dim, dim == 1 ? 10 : 6, 9);
    for (int p : {2, 5, 10}) {
      const FilterBank bank = filter_bank(p);
      const WaveletCoefficients c = analyze(f, bank);
      CHECK(sup_norm(reconstruct(c, bank) - f) < 1e-10 * sup_norm(f));
      double mean_sq = 0.0;
      for (double v : f.samples()) mean_sq += v * v;
      CHECK(c.energy() == doctest::Approx(mean_sq / static_cast<double>(f.size())).epsilon(1e-10));
    }
  }
}

TEST_CASE("an atom analyzes to a single unit coefficient") {
  const GridFunction f = synthesize(parse_function_spec("wavelet-atom l=1 j=4 k=9"), 1, 10);
  const WaveletCoefficients c = analyze(f, filter_bank(8));
  for (int j = 0; j < 10; ++j)
    for (std::size_t i = 0; i < cubes_at_level(1, j); ++i)
      CHECK(c.at(1, j, i) == doctest::Approx(j == 4 && i == 9 ? 1.0 : 0.0).epsilon(1e-10).scale(1.0));
  for (double s : {0.5, 1.0})
    CHECK(wavelet_sup_term(c, s) == doctest::Approx(std::pow(2.0, 4 * (0.5 + s))).epsilon(1e-9));
}

TEST_CASE("Jbmo box sums match a direct sum over subcubes") {
  const GridFunction f = random_function(1, 7, 4);
  const WaveletCoefficients c = analyze(f, filter_bank(4));
  const double s = 0.7;
  const auto sums = jbmo_box_sums(c, s);
  double best = 0.0;
  for (int j = 0; j < 7; ++j)
    for (std::size_t i = 0; i < cubes_at_level(1, j); ++i) {
      const DyadicCube q = DyadicCube::from_linear(1, j, i);
      double total = 0.0;
      for (int k = j; k < 7; ++k)
        for (std::size_t m = 0; m < cubes_at_level(1, k); ++m)
          if (cube_contains(q, DyadicCube::from_linear(1, k, m)))
            total += std::pow(4.0, k * s) * c.at(1, k, m) * c.at(1, k, m);
      total /= q.volume();
      CHECK(sums[static_cast<std::size_t>(j)][i] == doctest::Approx(total).epsilon(1e-10));
      best = std::max(best, total);
    }
  CHECK(jbmo_wavelet_norm(c, s) == doctest::Approx(std::abs(c.scaling()) + std::sqrt(best)).epsilon(1e-10));
}

TEST_CASE("T is the threshold of the wavelet field") {
  const GridFunction f = synthesize(parse_function_spec("weierstrass s=0.5 levels=8"), 1, 10);
  const WaveletCoefficients c = analyze(f, filter_bank(8));
  const CellField field = wavelet_field(c, 0.5, 9);
  for (double eps : {0.0, 0.3, 1.0, 1e6}) CHECK(build_T(c, 0.5, eps, 9) == field.threshold(eps));
  for (int j = 0; j <= 9; ++j)
    for (std::size_t i = 0; i < cubes_at_level(1, j); ++i)
      CHECK(field.at(j, i) == doctest::Approx(std::abs(c.at(1, j, i)) * std::pow(2.0, j * 1.0)).epsilon(1e-12).scale(1.0));
}

TEST_CASE("truncation keeps the norm of the remainder under epsilon") {
  const GridFunction f = synthesize(parse_function_spec("lacunary-random s=0.5 levels=8 seed=2"), 1, 10);
  const WaveletCoefficients c = analyze(f, filter_bank(6));
  const double s = 0.5;
  const double hi = wavelet_sup_term(c, s);
  for (double frac : {0.2, 0.5, 0.9}) {
    const WaveletCoefficients g = truncate_projection(c, s, frac * hi);
    CHECK(g.scaling() == c.scaling());
    const WaveletCoefficients diff = c - g;
    double worst = 0.0;
    for (int j = 0; j < 10; ++j)
      for (std::size_t i = 0; i < cubes_at_level(1, j); ++i) {
        worst = std::max(worst, std::abs(diff.at(1, j, i)) * std::pow(2.0, j * (0.5 + s)));
        // Each coefficient is either kept whole or removed.
        CHECK((g.at(1, j, i) == c.at(1, j, i) || g.at(1, j, i) == 0.0));
      }
    CHECK(worst <= frac * hi * (1.0 + 1e-12));
  }
}

TEST_CASE("unsupported banks are rejected") {
  CHECK_THROWS(filter_bank(1));
  CHECK_THROWS(filter_bank(11));
}
