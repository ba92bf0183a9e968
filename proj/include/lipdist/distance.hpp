#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lipdist/cell_field.hpp"
#include "lipdist/dyadic.hpp"
#include "lipdist/grid_function.hpp"
#include "lipdist/second_difference.hpp"
#include "lipdist/wavelet.hpp"

namespace lipdist {

enum class Method { secdiff, wavelet, poisson };

inline constexpr std::array<Method, 3> kAllMethods{Method::secdiff, Method::wavelet, Method::poisson};

std::string_view method_name(Method m) noexcept;
Method parse_method(std::string_view name);

struct MethodSettings {
  ProbeOptions probes;
  int vanishing_moments = 8;
  // A field whose per-level maxima fall by more than this many powers of two
  // per level (fitted over the deepest half of the range) tends to zero, so
  // every positive threshold leaves finitely many levels.
  double tail_decay = 0.25;
};

/// The cell field behind one method's superlevel sets, plus the seminorm that
/// bounds it from above (an empty set at that threshold).
struct MethodField {
  Method method = Method::secdiff;
  CellField field;
  double epsilon_hi = 0.0;
};

/// Deepest level each method can resolve on a grid of the given depth.
int max_resolvable_level(Method m, int depth) noexcept;

/// Field over levels 0..max_level (bounded by max_resolvable_level).
MethodField method_field(const GridFunction& f, double s, Method method, int max_level,
                         const MethodSettings& settings = {});

/// Least-squares slope of log2(max of the field at level j) against j over
/// the deepest half of the range.
double field_tail_slope(const CellField& field, LevelRange range);

struct TracePoint {
  double epsilon = 0.0;
  CarlesonReport report;
  bool diverging = false;  // effective flag: slope criterion and non-vanishing tail
};

struct DistanceEstimate {
  Method method = Method::secdiff;
  double s = 1.0;
  double epsilon_star = 0.0;
  double epsilon_lo = 0.0;     // final bracket [epsilon_lo, epsilon_up]
  double epsilon_up = 0.0;
  double epsilon_hi = 0.0;     // upper end of the search, the method's own scale
  double resolution = 0.0;  // epsilon_hi * 2^-iterations
  int iterations = 20;
  double theta = 0.1;
  LevelRange range;
  double tail_slope = 0.0;
  bool tail_vanishes = false;
  std::vector<TracePoint> trace;  // evaluation order; first entries are eps_hi and 0+
  bool monotone = true;
};

/// Bisection for the smallest threshold whose superlevel set is not
/// diverging. Non-monotone traces are flagged, never repaired.
DistanceEstimate epsilon_star(const GridFunction& f, double s, Method method, LevelRange range,
                              double theta = 0.1, const MethodSettings& settings = {},
                              int iterations = 20);

/// ratio a/b, or 1 when both are below their bracket resolution.
double estimate_ratio(const DistanceEstimate& a, const DistanceEstimate& b);

struct MethodComparison {
  std::array<DistanceEstimate, 3> estimates;  // secdiff, wavelet, poisson
  struct Ratio {
    Method numerator;
    Method denominator;
    double value;
    bool within_band;
  };
  std::vector<Ratio> ratios;
  double band = 32.0;
  bool all_within_band = true;
};

MethodComparison compare_methods(const GridFunction& f, double s, LevelRange range, double theta = 0.1,
                                 const MethodSettings& settings = {}, double band = 32.0);

struct InclusionReport {
  Method source = Method::wavelet;
  Method target = Method::secdiff;
  double epsilon = 0.0;
  std::size_t source_size = 0;
  std::vector<double> c_grid;
  std::vector<double> r_grid;
  std::vector<std::vector<double>> fraction;  // [c index][R index]
  double eta = 0.99;
  // Smallest R first, then largest c, among pairs reaching eta.
  std::optional<std::pair<double, double>> achieved;
};

/// Fraction of source(eps) cells inside enlarge(target(c eps), R) for every
/// (c, R) on the grids. Both sets use levels <= max_level.
InclusionReport inclusion_probe(const GridFunction& f, double s, double epsilon, Method source,
                                Method target, const std::vector<double>& c_grid,
                                const std::vector<double>& r_grid, int max_level, double eta = 0.99,
                                const MethodSettings& settings = {});

struct WitnessReport {
  double epsilon = 0.0;
  double difference_norm = 0.0;   // lip_wavelet_norm(f - g)
  bool norm_bound_holds = false;  // difference_norm <= epsilon
  double coefficient_norm = 0.0;  // ||c(f)||_s
  std::vector<double> box_max;    // per level: max over cubes of the box sum of g
  std::vector<double> bound_max;  // per level: max over cubes of the bound
  double worst_ratio = 0.0;       // max box sum / bound over cubes with a positive bound
  bool box_bound_holds = false;
};

/// Builds g = truncate_projection(f, s, eps) and checks ||f - g||_s <= eps and,
/// cube by cube, box_sum_Q(g) <= ||c(f)||_s^2 * (box mass of T(s, f, eps) over Q).
WitnessReport projection_distance_witness(const WaveletCoefficients& coeffs, double s, double epsilon);

nlohmann::json to_json(const DistanceEstimate& e);
nlohmann::json to_json(const MethodComparison& c);
nlohmann::json to_json(const InclusionReport& r);
nlohmann::json to_json(const WitnessReport& r);

}  // namespace lipdist
