#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "lipdist/dyadic.hpp"

using namespace lipdist;

namespace {

HalfSpaceSet random_set(int dim, int max_level, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  HalfSpaceSet set(dim, max_level);
  for (int j = 0; j <= max_level; ++j)
    for (std::size_t i = 0; i < cubes_at_level(dim, j); ++i)
      if (coin(rng)) set.insert(j, i);
  return set;
}

// Direct sum over every cell of the set, checked for containment one by one.
double brute_box(const HalfSpaceSet& set, const DyadicCube& box, int depth) {
  double sum = 0.0;
  for (const DyadicCube& p : set.cells())
    if (p.level <= depth && cube_contains(box, p)) sum += p.volume() / box.volume();
  return std::numbers::ln2 * sum;
}

}  // namespace

TEST_CASE("cube parent and containment") {
  const DyadicCube q{2, 3, {5, 2}};
  const DyadicCube p = q.parent();
  CHECK(p.level == 2);
  CHECK(p.index[0] == 2);
  CHECK(p.index[1] == 1);
  CHECK(cube_contains(p, q));
  CHECK(cube_contains(q, q));
  CHECK_FALSE(cube_contains(q, p));
  CHECK_FALSE(cube_contains(DyadicCube{2, 2, {0, 1}}, q));
  CHECK(DyadicCube::from_linear(2, 3, q.linear_index()) == q);
}

TEST_CASE("full stacks give (J + 1) log 2") {
  for (int dim : {1, 2}) {
    const int top = dim == 1 ? 14 : 7;
    for (int J = 0; J <= top; ++J) {
      const CarlesonReport r = carleson_sup(HalfSpaceSet::full_stack(dim, J), {0, J});
      for (int k = 0; k <= J; ++k)
        CHECK(std::abs(r.values[static_cast<std::size_t>(k)] - (k + 1) * std::numbers::ln2) < 1e-12);
    }
  }
}

TEST_CASE("box values match a direct cell sum") {
  for (int dim : {1, 2}) {
    const int depth = dim == 1 ? 7 : 4;
    const HalfSpaceSet set = random_set(dim, depth, 0.3, 11 + dim);
    const auto masses = carleson_box_masses(set);
    for (int j = 0; j <= depth; ++j)
      for (std::size_t i = 0; i < cubes_at_level(dim, j); ++i) {
        const DyadicCube q = DyadicCube::from_linear(dim, j, i);
        const double oracle = brute_box(set, q, depth);
        CHECK(carleson_box_value(set, q) == doctest::Approx(oracle).epsilon(1e-12).scale(1.0));
        CHECK(std::numbers::ln2 * masses[static_cast<std::size_t>(j)][i] ==
              doctest::Approx(oracle).epsilon(1e-12).scale(1.0));
      }
  }
}

TEST_CASE("depth-truncated maxima match brute force") {
  const HalfSpaceSet set = random_set(1, 8, 0.4, 5);
  const CarlesonReport r = carleson_sup(set, {2, 8});
  for (int J = 2; J <= 8; ++J) {
    double best = 0.0;
    for (int j = 0; j <= J; ++j)
      for (std::size_t i = 0; i < cubes_at_level(1, j); ++i)
        best = std::max(best, brute_box(set, DyadicCube::from_linear(1, j, i), J));
    CHECK(r.values[static_cast<std::size_t>(J - 2)] == doctest::Approx(best).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("divergence flag follows the slope of M_J") {
  CHECK(carleson_sup(HalfSpaceSet::full_stack(1, 12), {6, 12}).diverging);
  HalfSpaceSet single(1, 12);
  single.insert(DyadicCube{1, 3, {2, 0}});
  const CarlesonReport r = carleson_sup(single, {6, 12});
  CHECK_FALSE(r.diverging);
  CHECK(r.slope == doctest::Approx(0.0));
  const CarlesonReport empty = carleson_sup(HalfSpaceSet(1, 12), {6, 12});
  CHECK_FALSE(empty.diverging);
  CHECK(empty.values.back() == 0.0);
  // One cube of every level along a single branch: M_J stays bounded.
  HalfSpaceSet branch(1, 12);
  for (int j = 0; j <= 12; ++j) branch.insert(j, 0);
  CHECK_FALSE(carleson_sup(branch, {6, 12}).diverging);
  CHECK(carleson_sup(HalfSpaceSet::full_stack(1, 12), {6, 12}, 10.0).diverging == false);
}

TEST_CASE("set operations and JSON round trip") {
  const HalfSpaceSet set = random_set(2, 4, 0.25, 8);
  const HalfSpaceSet back = half_space_set_from_json(to_json(set));
  CHECK(back == set);
  CHECK(set.truncated(2).is_subset_of(set));
  std::size_t total = 0;
  for (int j = 0; j <= 4; ++j) total += set.count_at_level(j);
  CHECK(total == set.size());
  CHECK(set.cells().size() == set.size());
}
