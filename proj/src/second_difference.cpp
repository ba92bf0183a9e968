#include "lipdist/second_difference.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>

#include "lipdist/error.hpp"
#include "sampling.hpp"

namespace lipdist {

namespace {

using Offsets = std::vector<std::array<long, 2>>;

double delta2_at(const GridFunction& f, long a, long b, const Offsets& offsets) noexcept {
  const double center = 2.0 * f.at(a, b);
  double best = 0.0;
  for (const auto& h : offsets)
    best = std::max(best, std::abs(f.at(a + h[0], b + h[1]) - center + f.at(a - h[0], b - h[1])));
  return best;
}

long grid_steps(const GridFunction& f, double y) {
  const double steps = y * static_cast<double>(f.side());
  const double rounded = std::round(steps);
  if (rounded < 1.0 || std::abs(steps - rounded) > 1e-9 * std::max(1.0, steps))
    throw ValidationError("scale y must be a positive multiple of the grid spacing");
  return static_cast<long>(rounded);
}

class OffsetCache {
 public:
  OffsetCache(int dim, int directions) : dim_(dim), directions_(directions) {}
  const Offsets& get(long step) {
    auto it = cache_.find(step);
    if (it == cache_.end()) it = cache_.emplace(step, difference_offsets(dim_, step, directions_)).first;
    return it->second;
  }

 private:
  int dim_;
  int directions_;
  std::map<long, Offsets> cache_;
};

// Probe heights in grid steps for a cell of side `cell_steps`.
std::vector<long> cell_heights(long cell_steps) {
  std::set<long> heights;
  for (int eighths : {5, 6, 7, 8}) {
    const long m = std::lround(static_cast<double>(cell_steps) * eighths / 8.0);
    heights.insert(std::max(1L, m));
  }
  return {heights.begin(), heights.end()};
}

std::vector<long> seminorm_scales(int depth, int refinement) {
  const long side = 1L << depth;
  std::set<long> scales;
  for (int j = 1; j < depth; ++j) {
    const long base = 1L << (depth - j);
    for (int i = 0; i < refinement; ++i) {
      const long m = std::lround(static_cast<double>(base) * (1.0 + static_cast<double>(i) / refinement));
      if (m >= 1 && m < side) scales.insert(m);
    }
  }
  return {scales.begin(), scales.end()};
}

}  // namespace

std::vector<std::array<long, 2>> difference_offsets(int dim, long step, int directions) {
  if (step < 1) throw ValidationError("difference step must be >= 1 grid spacing");
  if (dim == 1) return {{step, 0}};
  if (directions < 1) throw ValidationError("direction count must be >= 1");
  Offsets out;
  const double m = static_cast<double>(step);
  for (int i = 0; i < directions; ++i) {
    const double angle = std::numbers::pi * i / directions;
    const double ix = m * std::cos(angle), iy = m * std::sin(angle);
    const long cx = std::lround(ix), cy = std::lround(iy);
    bool found = false;
    std::array<long, 2> best{0, 0};
    double best_dist = 0.0;
    for (long dx = -1; dx <= 1; ++dx) {
      for (long dy = -1; dy <= 1; ++dy) {
        const long hx = cx + dx, hy = cy + dy;
        const double norm = std::hypot(static_cast<double>(hx), static_cast<double>(hy));
        if (std::abs(norm - m) > 0.02 * m) continue;
        const double dist = std::hypot(hx - ix, hy - iy);
        if (!found || dist < best_dist) {
          found = true;
          best = {hx, hy};
          best_dist = dist;
        }
      }
    }
    if (found && std::find(out.begin(), out.end(), best) == out.end()) out.push_back(best);
  }
  return out;
}

double second_difference(const GridFunction& f, std::array<long, 2> point, double y, int directions) {
  const long m = grid_steps(f, y);
  return delta2_at(f, point[0], point[1], difference_offsets(f.dim(), m, directions));
}

double holder_seminorm(const GridFunction& f, double s, const ProbeOptions& options) {
  if (!(s > 0.0 && s <= 1.0)) throw ValidationError("exponent s must lie in (0, 1]");
  if (options.scale_refinement < 1) throw ValidationError("scale refinement must be >= 1");
  const long side = static_cast<long>(f.side());
  const long rows = f.dim() == 2 ? side : 1;
  double best = 0.0;
  for (long m : seminorm_scales(f.depth(), options.scale_refinement)) {
    const Offsets offsets = difference_offsets(f.dim(), m, options.directions);
    const double norm = std::pow(static_cast<double>(m) * f.spacing(), s);
    double level_best = 0.0;
    for (long a = 0; a < side; ++a)
      for (long b = 0; b < rows; ++b) level_best = std::max(level_best, delta2_at(f, a, b, offsets));
    best = std::max(best, level_best / norm);
  }
  return best;
}

CellField second_difference_field(const GridFunction& f, double s, int max_level,
                                  const ProbeOptions& options) {
  if (!(s > 0.0 && s <= 1.0)) throw ValidationError("exponent s must lie in (0, 1]");
  if (max_level < 0 || max_level > f.depth() - 2)
    throw ValidationError("max level must lie in [0, depth - 2]");
  if (options.probes_per_axis < 1) throw ValidationError("probes per axis must be >= 1");

  const int n = f.dim();
  CellField field(n, max_level, s, f.label());
  OffsetCache offsets(n, options.directions);

  for (int j = 0; j <= max_level; ++j) {
    const long cell_steps = 1L << (f.depth() - j);
    const long stride = std::max(1L, cell_steps / options.probes_per_axis);
    const std::vector<long> heights = cell_heights(cell_steps);
    std::vector<double> norms;
    for (long m : heights) norms.push_back(std::pow(static_cast<double>(m) * f.spacing(), s));

    const std::size_t cells = cubes_at_level(n, j);
    for (std::size_t i = 0; i < cells; ++i) {
      const DyadicCube q = DyadicCube::from_linear(n, j, i);
      const long a0 = static_cast<long>(q.index[0]) * cell_steps;
      const long b0 = static_cast<long>(q.index[1]) * cell_steps;
      double best = 0.0;
      for (std::size_t h = 0; h < heights.size(); ++h) {
        const Offsets& off = offsets.get(heights[h]);
        double probe_max = 0.0;
        for (long a = a0; a < a0 + cell_steps; a += stride) {
          if (n == 1) {
            probe_max = std::max(probe_max, delta2_at(f, a, 0, off));
          } else {
            for (long b = b0; b < b0 + cell_steps; b += stride)
              probe_max = std::max(probe_max, delta2_at(f, a, b, off));
          }
        }
        best = std::max(best, probe_max / norms[h]);
      }
      field.at(j, i) = best;
    }
  }
  return field;
}

HalfSpaceSet build_S(const GridFunction& f, double s, double epsilon, int max_level,
                     const ProbeOptions& options) {
  return second_difference_field(f, s, max_level, options).threshold(epsilon);
}

ContinuityReport continuity_check(const GridFunction& f, double s, std::size_t sample_count,
                                  std::uint64_t seed, const ProbeOptions& options) {
  ContinuityReport report;
  report.norm = holder_seminorm(f, s, options) + sup_norm(f);
  if (report.norm == 0.0) throw ValidationError("continuity check needs a nonzero function");

  const int n = f.dim();
  const long side = static_cast<long>(f.side());
  const double h = f.spacing();
  const bool zygmund = s == 1.0;
  OffsetCache offsets(n, options.directions);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_scale(0.0, static_cast<double>(f.depth() - 2));
  std::uniform_int_distribution<long> position(0, side - 1);

  auto modulus_term = [&](double d, double y) {
    if (d == 0.0) return 0.0;
    return zygmund ? d * std::log(std::numbers::e + y / d) : std::pow(d, s);
  };
  auto reach_of = [&](long m) { return zygmund ? std::max(0L, (m - 1) / 2) : m; };

  struct Pair {
    long m, m2, a, b, da, db;
  };
  auto draw = [&] {
    Pair p;
    p.m = std::max(1L, std::lround(std::exp2(log_scale(rng))));
    p.m2 = p.m + detail::log_uniform_offset(rng, (p.m - 1) / 2);  // keeps m2 / m in (1/2, 2)
    p.a = position(rng);
    p.b = n == 2 ? position(rng) : 0;
    p.da = detail::log_uniform_offset(rng, reach_of(p.m));
    p.db = n == 2 ? detail::log_uniform_offset(rng, reach_of(p.m)) : 0;
    return p;
  };
  auto perturb = [&](Pair p) {
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
      case 0:
        p.a += detail::log_uniform_offset(rng, p.m, 0.0);
        if (n == 2) p.b += detail::log_uniform_offset(rng, p.m);
        break;
      case 1: {
        const long dm = detail::log_uniform_offset(rng, std::max(1L, p.m / 4), 0.0);
        p.m = std::max(1L, p.m + dm);
        p.m2 = std::max(1L, p.m2 + dm);
        break;
      }
      case 2:
        p.m2 = p.m + detail::log_uniform_offset(rng, (p.m - 1) / 2);
        break;
      default:
        p.da = detail::log_uniform_offset(rng, reach_of(p.m));
        if (n == 2) p.db = detail::log_uniform_offset(rng, reach_of(p.m));
        break;
    }
    return p;
  };
  auto score = [&](const Pair& p) -> std::optional<double> {
    const long top = std::exp2(f.depth() - 2);
    if (p.m > top || p.m2 > top || !(2 * p.m > p.m2 && 2 * p.m2 > p.m)) return std::nullopt;
    const double y = static_cast<double>(p.m) * h, y2 = static_cast<double>(p.m2) * h;
    const double dx = std::hypot(static_cast<double>(p.da), static_cast<double>(p.db)) * h;
    if (zygmund && !(dx < y / 2.0)) return std::nullopt;
    if (p.da == 0 && p.db == 0 && p.m == p.m2) return std::nullopt;
    const double lhs = std::abs(delta2_at(f, p.a, p.b, offsets.get(p.m)) -
                                delta2_at(f, p.a + p.da, p.b + p.db, offsets.get(p.m2)));
    const double modulus = modulus_term(dx, y) + modulus_term(std::abs(y - y2), y);
    return lhs / (report.norm * modulus);
  };

  auto octave = [](const Pair& p) { return static_cast<int>(std::log2(static_cast<double>(p.m))); };
  report.max_ratio =
      detail::maximize_samples<Pair>(sample_count, rng, f.depth() - 1, draw, perturb, score, octave);
  report.pairs = sample_count;
  return report;
}

}  // namespace lipdist
