#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

namespace lipdist::detail {

// Signed offset in [-reach, reach] whose magnitude is log-uniform over
// [1, reach], zero with probability zero_weight. Small offsets, where
// difference quotients peak, are drawn as often as large ones.
inline long log_uniform_offset(std::mt19937_64& rng, long reach, double zero_weight = 0.25) {
  if (reach < 1) return 0;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (unit(rng) < zero_weight) return 0;
  const double top = std::log2(static_cast<double>(reach) + 1.0);
  const long magnitude = std::clamp(static_cast<long>(std::exp2(unit(rng) * top)), 1L, reach);
  return unit(rng) < 0.5 ? -magnitude : magnitude;
}


// Estimates the supremum of `score` over candidate samples using `count`
// admissible evaluations. The first quarter are fresh draws; afterwards three
// in four candidates are local perturbations of a stratum's best samples so
// far, where `stratum` (in [0, strata)) keeps separate elites, e.g. per scale
// octave, so that every octave is refined. `score` returns nullopt for
// inadmissible samples, which are not counted.
template <class Sample, class Draw, class Perturb, class Score, class Stratum>
double maximize_samples(std::size_t count, std::mt19937_64& rng, int strata, Draw&& draw,
                        Perturb&& perturb, Score&& score, Stratum&& stratum) {
  constexpr std::size_t kElite = 4;
  std::vector<std::vector<std::pair<double, Sample>>> elite(static_cast<std::size_t>(strata));
  std::vector<std::size_t> filled;  // strata with at least one elite sample
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double best = 0.0;
  std::size_t evaluated = 0;
  while (evaluated < count) {
    const bool refine = evaluated >= count / 4 && !filled.empty() && unit(rng) < 0.75;
    Sample candidate;
    if (refine) {
      const auto& group = elite[filled[static_cast<std::size_t>(unit(rng) * filled.size()) % filled.size()]];
      candidate = perturb(group[static_cast<std::size_t>(unit(rng) * group.size()) % group.size()].second);
    } else {
      candidate = draw();
    }
    const std::optional<double> value = score(candidate);
    if (!value) continue;
    ++evaluated;
    best = std::max(best, *value);

    const auto k = static_cast<std::size_t>(std::clamp(stratum(candidate), 0, strata - 1));
    auto& group = elite[k];
    if (group.empty()) filled.push_back(k);
    if (group.size() < kElite || *value > group.back().first) {
      if (group.size() == kElite) group.pop_back();
      auto pos = std::find_if(group.begin(), group.end(), [&](const auto& e) { return e.first < *value; });
      group.insert(pos, {*value, candidate});
    }
  }
  return best;
}

}  // namespace lipdist::detail
