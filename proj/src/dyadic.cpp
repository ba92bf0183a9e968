#include "lipdist/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "lipdist/error.hpp"

namespace lipdist {

DyadicCube DyadicCube::from_linear(int dim, int level, std::size_t linear) noexcept {
  DyadicCube q{dim, level, {0, 0}};
  if (dim == 1) {
    q.index[0] = static_cast<std::uint32_t>(linear);
  } else {
    q.index[0] = static_cast<std::uint32_t>(linear >> level);
    q.index[1] = static_cast<std::uint32_t>(linear & ((std::size_t{1} << level) - 1));
  }
  return q;
}

DyadicCube DyadicCube::parent() const noexcept {
  if (level == 0) return *this;
  return DyadicCube{dim, level - 1, {index[0] >> 1, index[1] >> 1}};
}

bool cube_contains(const DyadicCube& outer, const DyadicCube& inner) noexcept {
  if (outer.dim != inner.dim || inner.level < outer.level) return false;
  const int shift = inner.level - outer.level;
  for (int a = 0; a < outer.dim; ++a)
    if ((inner.index[a] >> shift) != outer.index[a]) return false;
  return true;
}

HalfSpaceSet::HalfSpaceSet(int dim, int max_level) : dim_(dim), max_level_(max_level) {
  if (dim != 1 && dim != 2) throw ValidationError("dimension must be 1 or 2");
  if (max_level < 0 || dim * max_level > 40) throw ValidationError("max level out of range");
  flags_.reserve(static_cast<std::size_t>(max_level) + 1);
  for (int j = 0; j <= max_level; ++j) flags_.emplace_back(cubes_at_level(dim, j), 0);
}

HalfSpaceSet HalfSpaceSet::full_stack(int dim, int max_level) {
  HalfSpaceSet set(dim, max_level);
  for (auto& level : set.flags_) std::fill(level.begin(), level.end(), 1);
  return set;
}

namespace {
void check_cube(const HalfSpaceSet& set, const DyadicCube& q) {
  if (q.dim != set.dim()) throw ValidationError("cube dimension does not match set");
  if (q.level < 0 || q.level > set.max_level()) throw ValidationError("cube level out of range");
  const std::uint32_t limit = std::uint32_t{1} << q.level;
  for (int a = 0; a < q.dim; ++a)
    if (q.index[a] >= limit) throw ValidationError("cube index out of range");
}
}  // namespace

bool HalfSpaceSet::contains(const DyadicCube& q) const {
  if (q.dim != dim_ || q.level < 0 || q.level > max_level_) return false;
  return contains(q.level, q.linear_index());
}

void HalfSpaceSet::insert(const DyadicCube& q) {
  check_cube(*this, q);
  insert(q.level, q.linear_index());
}

void HalfSpaceSet::erase(const DyadicCube& q) {
  check_cube(*this, q);
  flags_[static_cast<std::size_t>(q.level)][q.linear_index()] = 0;
}

std::size_t HalfSpaceSet::count_at_level(int level) const noexcept {
  const auto& f = flags_[static_cast<std::size_t>(level)];
  return static_cast<std::size_t>(std::count(f.begin(), f.end(), std::uint8_t{1}));
}

std::size_t HalfSpaceSet::size() const noexcept {
  std::size_t total = 0;
  for (int j = 0; j <= max_level_; ++j) total += count_at_level(j);
  return total;
}

std::vector<DyadicCube> HalfSpaceSet::cells() const {
  std::vector<DyadicCube> out;
  for (int j = 0; j <= max_level_; ++j) {
    const auto& f = flags_[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i]) out.push_back(DyadicCube::from_linear(dim_, j, i));
  }
  return out;
}

HalfSpaceSet HalfSpaceSet::truncated(int level) const {
  HalfSpaceSet out(dim_, std::min(level, max_level_));
  for (int j = 0; j <= out.max_level_; ++j) out.flags_[static_cast<std::size_t>(j)] = flags_[static_cast<std::size_t>(j)];
  return out;
}

bool HalfSpaceSet::is_subset_of(const HalfSpaceSet& other) const {
  if (other.dim_ != dim_) return false;
  for (int j = 0; j <= max_level_; ++j) {
    const auto& f = flags_[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i] && (j > other.max_level_ || !other.contains(j, i))) return false;
  }
  return true;
}

double carleson_box_value(const HalfSpaceSet& set, const DyadicCube& box) {
  if (box.dim != set.dim()) throw ValidationError("box dimension does not match set");
  double mass = 0.0;  // sum |P| / |Q|, exact dyadic rational
  for (int j = std::max(box.level, 0); j <= set.max_level(); ++j) {
    const int shift = j - box.level;
    const std::size_t span = std::size_t{1} << shift;
    std::size_t count = 0;
    if (set.dim() == 1) {
      const std::size_t first = std::size_t{box.index[0]} << shift;
      for (std::size_t i = first; i < first + span; ++i) count += set.contains(j, i);
    } else {
      const std::size_t r0 = std::size_t{box.index[0]} << shift;
      const std::size_t c0 = std::size_t{box.index[1]} << shift;
      for (std::size_t r = r0; r < r0 + span; ++r)
        for (std::size_t c = c0; c < c0 + span; ++c) count += set.contains(j, (r << j) + c);
    }
    mass += std::ldexp(static_cast<double>(count), -set.dim() * shift);
  }
  return std::numbers::ln2 * mass;
}

std::vector<std::vector<double>> carleson_box_masses(const HalfSpaceSet& set) {
  const int n = set.dim();
  const double child_weight = std::ldexp(1.0, -n);
  std::vector<std::vector<double>> masses(static_cast<std::size_t>(set.max_level()) + 1);
  for (int j = set.max_level(); j >= 0; --j) {
    const auto flags = set.level_flags(j);
    auto& mj = masses[static_cast<std::size_t>(j)];
    mj.assign(flags.begin(), flags.end());
    if (j == set.max_level()) continue;
    const auto& child = masses[static_cast<std::size_t>(j) + 1];
    const std::size_t side = std::size_t{2} << j;
    for (std::size_t i = 0; i < child.size(); ++i) {
      std::size_t p;
      if (n == 1) {
        p = i >> 1;
      } else {
        const std::size_t r = i / side, c = i % side;
        p = ((r >> 1) << j) + (c >> 1);
      }
      mj[p] += child[i] * child_weight;
    }
  }
  return masses;
}

CarlesonReport carleson_sup(const HalfSpaceSet& set, LevelRange range, double theta) {
  if (range.lo > range.hi) throw ValidationError("empty level range");
  if (range.lo < 0 || range.hi > set.max_level())
    throw ValidationError("level range exceeds the set's depth");

  const int n = set.dim();
  const double child_weight = std::ldexp(1.0, -n);
  CarlesonReport report;
  report.range = range;
  report.theta = theta;

  // weights[j][q] = sum over cells P subset Q (level <= current J) of |P|/|Q|.
  std::vector<std::vector<double>> weights;
  for (int j = 0; j <= range.hi; ++j) weights.emplace_back(cubes_at_level(n, j), 0.0);

  std::vector<double> delta, parent_delta;
  for (int J = 0; J <= range.hi; ++J) {
    const auto flags = set.level_flags(J);
    delta.assign(flags.begin(), flags.end());
    auto& wJ = weights[static_cast<std::size_t>(J)];
    for (std::size_t i = 0; i < delta.size(); ++i) wJ[i] += delta[i];

    for (int j = J - 1; j >= 0; --j) {
      parent_delta.assign(cubes_at_level(n, j), 0.0);
      const std::size_t side = std::size_t{1} << (j + 1);
      for (std::size_t i = 0; i < delta.size(); ++i) {
        if (delta[i] == 0.0) continue;
        std::size_t p;
        if (n == 1) {
          p = i >> 1;
        } else {
          const std::size_t r = i / side, c = i % side;
          p = ((r >> 1) << j) + (c >> 1);
        }
        parent_delta[p] += delta[i] * child_weight;
      }
      auto& wj = weights[static_cast<std::size_t>(j)];
      for (std::size_t i = 0; i < parent_delta.size(); ++i) wj[i] += parent_delta[i];
      delta.swap(parent_delta);
    }

    if (J < range.lo) continue;
    double best = 0.0;
    DyadicCube best_cube{n, 0, {0, 0}};
    for (int j = 0; j <= J; ++j) {
      const auto& wj = weights[static_cast<std::size_t>(j)];
      for (std::size_t i = 0; i < wj.size(); ++i) {
        if (wj[i] > best) {
          best = wj[i];
          best_cube = DyadicCube::from_linear(n, j, i);
        }
      }
    }
    report.values.push_back(std::numbers::ln2 * best);
    report.argmax.push_back(best_cube);
  }

  // Least-squares slope over the deepest half of the range.
  const int count = range.count();
  const int tail = count >= 2 ? std::max(2, (count + 1) / 2) : 1;
  if (tail >= 2) {
    double mx = 0.0, my = 0.0;
    for (int t = count - tail; t < count; ++t) {
      mx += range.lo + t;
      my += report.values[static_cast<std::size_t>(t)];
    }
    mx /= tail;
    my /= tail;
    double sxy = 0.0, sxx = 0.0;
    for (int t = count - tail; t < count; ++t) {
      const double dx = range.lo + t - mx;
      sxy += dx * (report.values[static_cast<std::size_t>(t)] - my);
      sxx += dx * dx;
    }
    report.slope = sxy / sxx / std::numbers::ln2;
  }
  report.diverging = report.slope > theta;
  return report;
}

nlohmann::json to_json(const HalfSpaceSet& set) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& q : set.cells()) {
    if (q.dim == 1)
      cells.push_back({q.level, q.index[0]});
    else
      cells.push_back({q.level, q.index[0], q.index[1]});
  }
  return {{"n", set.dim()}, {"J_max", set.max_level()}, {"cells", std::move(cells)}};
}

HalfSpaceSet half_space_set_from_json(const nlohmann::json& j) {
  HalfSpaceSet set(j.at("n").get<int>(), j.at("J_max").get<int>());
  for (const auto& cell : j.at("cells")) {
    if (cell.size() != static_cast<std::size_t>(set.dim()) + 1)
      throw ValidationError("cell entry has wrong arity");
    DyadicCube q{set.dim(), cell[0].get<int>(), {0, 0}};
    for (int a = 0; a < set.dim(); ++a) q.index[a] = cell[a + 1].get<std::uint32_t>();
    set.insert(q);
  }
  return set;
}

void write_csv(std::ostream& out, const HalfSpaceSet& set) {
  out << (set.dim() == 1 ? "level,k0\n" : "level,k0,k1\n");
  for (const auto& q : set.cells()) {
    out << q.level << ',' << q.index[0];
    if (q.dim == 2) out << ',' << q.index[1];
    out << '\n';
  }
}

nlohmann::json to_json(const CarlesonReport& report) {
  nlohmann::json argmax = nlohmann::json::array();
  for (const auto& q : report.argmax) {
    nlohmann::json idx = nlohmann::json::array();
    for (int a = 0; a < q.dim; ++a) idx.push_back(q.index[a]);
    argmax.push_back({{"level", q.level}, {"index", idx}});
  }
  return {{"J_range", {report.range.lo, report.range.hi}},
          {"M_J", report.values},
          {"argmax", std::move(argmax)},
          {"slope_log2", report.slope},
          {"theta", report.theta},
          {"diverging", report.diverging}};
}

}  // namespace lipdist
