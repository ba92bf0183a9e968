#include "lipdist/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "lipdist/error.hpp"
#include "lipdist/hyperbolic.hpp"
#include "sampling.hpp"

namespace lipdist {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double d2y_multiplier(double k, double y) {
  const double xi = kTwoPi * k;
  return xi * xi * std::exp(-xi * y);
}

GridFunction apply_to_spectrum(const SpectralFunction& F, double y, bool second_derivative) {
  SpectralFunction G = F;
  auto c = G.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double k = G.frequency_norm(i);
    c[i] *= second_derivative ? d2y_multiplier(k, y) : std::exp(-kTwoPi * k * y);
  }
  return from_spectral(G);
}

void check_height(double y) {
  if (!(y > 0.0)) throw ValidationError("extension height must be > 0");
}

void check_exponent(double s) {
  if (!(s > 0.0 && s <= 1.0)) throw ValidationError("exponent s must lie in (0, 1]");
}

}  // namespace

GridFunction poisson_extend(const GridFunction& f, double y) {
  check_height(y);
  GridFunction u = apply_to_spectrum(to_spectral(f), y, false);
  u.set_label(f.label());
  return u;
}

GridFunction d2y_extension(const GridFunction& f, double y) {
  check_height(y);
  GridFunction u = apply_to_spectrum(to_spectral(f), y, true);
  u.set_label(f.label());
  return u;
}

CellField derivative_field(const GridFunction& f, double s, int max_level, const ProbeOptions& options) {
  check_exponent(s);
  if (max_level < 0 || max_level > f.depth() - 2)
    throw ValidationError("max level must lie in [0, depth - 2]");
  if (options.probes_per_axis < 1) throw ValidationError("probes per axis must be >= 1");

  const int n = f.dim();
  const SpectralFunction F = to_spectral(f);
  CellField field(n, max_level, s, f.label());
  const long side = static_cast<long>(f.side());

  for (int j = 0; j <= max_level; ++j) {
    const long cell_steps = 1L << (f.depth() - j);
    const long stride = std::max(1L, cell_steps / options.probes_per_axis);
    const double cell_side = std::ldexp(1.0, -j);
    for (int eighths : {5, 6, 7, 8}) {
      const double y = cell_side * eighths / 8.0;
      const GridFunction d2 = apply_to_spectrum(F, y, true);
      const double weight = std::pow(y, 2.0 - s);
      const std::size_t cells = cubes_at_level(n, j);
      for (std::size_t i = 0; i < cells; ++i) {
        const DyadicCube q = DyadicCube::from_linear(n, j, i);
        const long a0 = static_cast<long>(q.index[0]) * cell_steps;
        const long b0 = static_cast<long>(q.index[1]) * cell_steps;
        double best = 0.0;
        for (long a = a0; a < a0 + cell_steps; a += stride) {
          if (n == 1) {
            best = std::max(best, std::abs(d2[static_cast<std::size_t>(a)]));
          } else {
            for (long b = b0; b < b0 + cell_steps; b += stride)
              best = std::max(best, std::abs(d2[static_cast<std::size_t>(a * side + b)]));
          }
        }
        field.at(j, i) = std::max(field.at(j, i), weight * best);
      }
    }
  }
  return field;
}

double holder_poisson_norm(const GridFunction& f, double s, int max_level, const ProbeOptions& options) {
  return sup_norm(f) + derivative_field(f, s, max_level, options).max();
}

HalfSpaceSet build_D(const GridFunction& f, double s, double epsilon, int max_level,
                     const ProbeOptions& options) {
  return derivative_field(f, s, max_level, options).threshold(epsilon);
}

LipschitzReport lipschitz_check(const GridFunction& f, double s, std::size_t sample_count,
                                std::uint64_t seed) {
  check_exponent(s);
  LipschitzReport report;
  report.norm = holder_poisson_norm(f, s, f.depth() - 2);
  if (report.norm == 0.0) throw ValidationError("Lipschitz check needs a nonzero function");

  // Quarter-octave ladder of heights from 1 down to 2^-(depth-2).
  const int rungs = 4 * (f.depth() - 2) + 1;
  const SpectralFunction F = to_spectral(f);
  std::vector<double> heights;
  std::vector<std::vector<double>> g;
  for (int t = 0; t < rungs; ++t) {
    const double y = std::exp2(-t / 4.0);
    const GridFunction d2 = apply_to_spectrum(F, y, true);
    std::vector<double> row(d2.samples().begin(), d2.samples().end());
    const double weight = std::pow(y, 2.0 - s);
    for (double& v : row) v *= weight;
    heights.push_back(y);
    g.push_back(std::move(row));
  }

  const int n = f.dim();
  const long side = static_cast<long>(f.side());
  const double h = f.spacing();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> rung(0, rungs - 1);
  std::uniform_int_distribution<int> rung_step(-4, 4);
  std::uniform_int_distribution<long> position(0, side - 1);

  auto value = [&](int t, long a, long b) {
    a = ((a % side) + side) % side;
    b = ((b % side) + side) % side;
    const std::size_t idx = n == 1 ? static_cast<std::size_t>(a) : static_cast<std::size_t>(a * side + b);
    return g[static_cast<std::size_t>(t)][idx];
  };
  auto reach_of = [&](int t, int t2) {
    const double y = std::min(heights[static_cast<std::size_t>(t)], heights[static_cast<std::size_t>(t2)]);
    return std::max(1L, std::lround(2.0 * y / h));
  };

  struct Pair {
    int t, t2;
    long a, b, da, db;
  };
  auto draw = [&] {
    Pair p;
    p.t = rung(rng);
    p.t2 = std::clamp(p.t + rung_step(rng), 0, rungs - 1);
    p.a = position(rng);
    p.b = n == 2 ? position(rng) : 0;
    const long reach = reach_of(p.t, p.t2);
    p.da = detail::log_uniform_offset(rng, reach);
    p.db = n == 2 ? detail::log_uniform_offset(rng, reach) : 0;
    return p;
  };
  auto perturb = [&](Pair p) {
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0: {
        const long reach = std::max(1L, std::lround(heights[static_cast<std::size_t>(p.t)] / h));
        p.a += detail::log_uniform_offset(rng, reach, 0.0);
        if (n == 2) p.b += detail::log_uniform_offset(rng, reach);
        break;
      }
      case 1: {
        const int dt = std::uniform_int_distribution<int>(-1, 1)(rng);
        p.t = std::clamp(p.t + dt, 0, rungs - 1);
        p.t2 = std::clamp(p.t2 + dt, 0, rungs - 1);
        break;
      }
      default: {
        p.t2 = std::clamp(p.t + rung_step(rng), 0, rungs - 1);
        const long reach = reach_of(p.t, p.t2);
        p.da = detail::log_uniform_offset(rng, reach);
        if (n == 2) p.db = detail::log_uniform_offset(rng, reach);
        break;
      }
    }
    return p;
  };
  auto score = [&](const Pair& p) -> std::optional<double> {
    HalfSpacePoint x, z;
    x.x = {static_cast<double>(p.a) * h, static_cast<double>(p.b) * h};
    x.y = heights[static_cast<std::size_t>(p.t)];
    z.x = {static_cast<double>(p.a + p.da) * h, static_cast<double>(p.b + p.db) * h};
    z.y = heights[static_cast<std::size_t>(p.t2)];
    const double rho = hyperbolic_distance(x, z);
    if (!(rho > 0.0 && rho <= 2.0)) return std::nullopt;
    const double diff = std::abs(value(p.t, p.a, p.b) - value(p.t2, p.a + p.da, p.b + p.db));
    return diff / (report.norm * rho);
  };

  auto octave = [](const Pair& p) { return p.t / 4; };
  report.max_ratio =
      detail::maximize_samples<Pair>(sample_count, rng, f.depth() - 1, draw, perturb, score, octave);
  report.pairs = sample_count;
  return report;
}

double bmo_norm(const GridFunction& f, int max_level) {
  if (max_level < 0 || max_level > f.depth()) throw ValidationError("max level must lie in [0, depth]");
  const int n = f.dim();
  const std::size_t side = f.side();
  double oscillation = 0.0;
  for (int j = 0; j <= max_level; ++j) {
    const std::size_t cell = side >> j;
    const std::size_t cubes_per_axis = std::size_t{1} << j;
    const double count = n == 1 ? static_cast<double>(cell) : static_cast<double>(cell * cell);
    for (std::size_t q0 = 0; q0 < cubes_per_axis; ++q0) {
      for (std::size_t q1 = 0; q1 < (n == 2 ? cubes_per_axis : 1); ++q1) {
        auto for_each_sample = [&](auto&& fn) {
          for (std::size_t a = q0 * cell; a < (q0 + 1) * cell; ++a) {
            if (n == 1) {
              fn(f[a]);
            } else {
              for (std::size_t b = q1 * cell; b < (q1 + 1) * cell; ++b) fn(f[a * side + b]);
            }
          }
        };
        double sum = 0.0;
        for_each_sample([&](double v) { sum += v; });
        const double mean = sum / count;
        double var = 0.0;
        for_each_sample([&](double v) { var += (v - mean) * (v - mean); });
        oscillation = std::max(oscillation, std::sqrt(var / count));
      }
    }
  }
  double energy = 0.0;
  for (double v : f.samples()) energy += v * v;
  return oscillation + std::sqrt(energy / static_cast<double>(f.size()));
}

double jbmo_direct_norm(const GridFunction& f, double s, int max_level) {
  check_exponent(s);
  return bmo_norm(bessel_lift(f, -s), max_level);
}

}  // namespace lipdist
