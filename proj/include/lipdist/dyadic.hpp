#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include <json.hpp>

namespace lipdist {

/// Dyadic cube 2^-level ([0,1)^n + index) on the torus.
struct DyadicCube {
  int dim = 1;
  int level = 0;
  std::array<std::uint32_t, 2> index{0, 0};

  double side() const noexcept { return std::ldexp(1.0, -level); }
  double volume() const noexcept { return std::ldexp(1.0, -dim * level); }

  /// Position of this cube in the row-major enumeration of its level.
  std::size_t linear_index() const noexcept {
    return dim == 1 ? index[0] : (std::size_t{index[0]} << level) + index[1];
  }
  static DyadicCube from_linear(int dim, int level, std::size_t linear) noexcept;

  DyadicCube parent() const noexcept;

  friend bool operator==(const DyadicCube&, const DyadicCube&) = default;
};

/// True iff `inner` lies in `outer` (a cube contains itself).
bool cube_contains(const DyadicCube& outer, const DyadicCube& inner) noexcept;

inline std::size_t cubes_at_level(int dim, int level) noexcept {
  return std::size_t{1} << (dim * level);
}

/// Union of Whitney cells T(Q) = Q x [l(Q)/2, l(Q)] for dyadic cubes Q of
/// level <= max_level. Membership is stored as one flag per cube and level.
class HalfSpaceSet {
 public:
  HalfSpaceSet(int dim, int max_level);

  /// All cells of levels 0..max_level.
  static HalfSpaceSet full_stack(int dim, int max_level);

  int dim() const noexcept { return dim_; }
  int max_level() const noexcept { return max_level_; }

  bool contains(const DyadicCube& q) const;
  bool contains(int level, std::size_t linear) const noexcept {
    return flags_[static_cast<std::size_t>(level)][linear] != 0;
  }
  void insert(const DyadicCube& q);
  void insert(int level, std::size_t linear) noexcept {
    flags_[static_cast<std::size_t>(level)][linear] = 1;
  }
  void erase(const DyadicCube& q);

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  std::size_t count_at_level(int level) const noexcept;

  /// Cells ordered by (level, linear index).
  std::vector<DyadicCube> cells() const;

  /// Same cells restricted to levels <= level.
  HalfSpaceSet truncated(int level) const;

  bool is_subset_of(const HalfSpaceSet& other) const;

  std::span<const std::uint8_t> level_flags(int level) const noexcept {
    return flags_[static_cast<std::size_t>(level)];
  }

  friend bool operator==(const HalfSpaceSet&, const HalfSpaceSet&) = default;

 private:
  int dim_;
  int max_level_;
  std::vector<std::vector<std::uint8_t>> flags_;
};

/// (1/|Q|) * integral over the box Q x (0, l(Q)) of chi_A dy dx / y.
/// Exact for cell unions: log 2 * sum_{P in A, P subset Q} |P| / |Q|.
double carleson_box_value(const HalfSpaceSet& set, const DyadicCube& box);

/// Box values divided by log 2 for every cube of level <= set.max_level(),
/// indexed [level][linear index].
std::vector<std::vector<double>> carleson_box_masses(const HalfSpaceSet& set);

struct LevelRange {
  int lo = 0;
  int hi = 0;
  int count() const noexcept { return hi - lo + 1; }
};

struct CarlesonReport {
  LevelRange range;
  std::vector<double> values;           // M_J for J = range.lo..range.hi
  std::vector<DyadicCube> argmax;       // maximizing box per depth
  double slope = 0.0;                   // dM_J/dJ over the upper half, in units of log 2
  double theta = 0.1;
  bool diverging = false;
};

/// Depth-truncated Carleson functional: M_J = max over boxes of level <= J of
/// the box value computed from cells of level <= J. Divergence means the
/// least-squares slope of M_J over the deepest half of the range exceeds
/// theta * log 2.
CarlesonReport carleson_sup(const HalfSpaceSet& set, LevelRange range, double theta = 0.1);

nlohmann::json to_json(const HalfSpaceSet& set);
HalfSpaceSet half_space_set_from_json(const nlohmann::json& j);
void write_csv(std::ostream& out, const HalfSpaceSet& set);

nlohmann::json to_json(const CarlesonReport& report);

}  // namespace lipdist
