#include "lipdist/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lipdist/error.hpp"
#include "lipdist/hyperbolic.hpp"
#include "lipdist/poisson.hpp"

namespace lipdist {

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::secdiff:
      return "secdiff";
    case Method::wavelet:
      return "wavelet";
    case Method::poisson:
      return "poisson";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (Method m : kAllMethods)
    if (method_name(m) == name) return m;
  throw ValidationError("unknown method '" + std::string(name) + "' (secdiff, wavelet, poisson)");
}

int max_resolvable_level(Method m, int depth) noexcept {
  return m == Method::wavelet ? depth - 1 : depth - 2;
}

MethodField method_field(const GridFunction& f, double s, Method method, int max_level,
                         const MethodSettings& settings) {
  if (max_level > max_resolvable_level(method, f.depth()))
    throw ValidationError("level " + std::to_string(max_level) + " is not resolved by " +
                          std::string(method_name(method)) + " on a depth " +
                          std::to_string(f.depth()) + " grid");
  switch (method) {
    case Method::secdiff: {
      CellField field = second_difference_field(f, s, max_level, settings.probes);
      const double hi = std::max(holder_seminorm(f, s, settings.probes), field.max());
      return {method, std::move(field), hi};
    }
    case Method::wavelet: {
      const WaveletCoefficients c = analyze(f, filter_bank(settings.vanishing_moments));
      return {method, wavelet_field(c, s, max_level), wavelet_sup_term(c, s)};
    }
    case Method::poisson: {
      CellField field = derivative_field(f, s, max_level, settings.probes);
      const double hi = field.max();
      return {method, std::move(field), hi};
    }
  }
  throw ValidationError("unknown method");
}

double field_tail_slope(const CellField& field, LevelRange range) {
  const int count = range.count();
  const int tail = std::max(2, (count + 1) / 2);
  if (count < 2) return 0.0;
  double mx = 0.0, my = 0.0;
  std::vector<double> logs;
  for (int t = count - tail; t < count; ++t) {
    const auto values = field.level_values(range.lo + t);
    const double m = *std::max_element(values.begin(), values.end());
    logs.push_back(std::log2(std::max(m, std::numeric_limits<double>::min())));
    mx += range.lo + t;
    my += logs.back();
  }
  mx /= tail;
  my /= tail;
  double sxy = 0.0, sxx = 0.0;
  for (int t = 0; t < tail; ++t) {
    const double dx = range.lo + count - tail + t - mx;
    sxy += dx * (logs[static_cast<std::size_t>(t)] - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

DistanceEstimate epsilon_star(const GridFunction& f, double s, Method method, LevelRange range,
                              double theta, const MethodSettings& settings, int iterations) {
  if (iterations < 1) throw ValidationError("bisection needs at least one iteration");
  if (range.lo < 0 || range.lo > range.hi) throw ValidationError("invalid level range");
  const MethodField mf = method_field(f, s, method, range.hi, settings);

  DistanceEstimate e;
  e.method = method;
  e.s = s;
  e.theta = theta;
  e.range = range;
  e.iterations = iterations;
  e.epsilon_hi = mf.epsilon_hi;
  e.resolution = std::ldexp(mf.epsilon_hi, -iterations);
  e.tail_slope = field_tail_slope(mf.field, range);
  e.tail_vanishes = e.tail_slope < -settings.tail_decay;

  auto evaluate = [&](double eps) {
    TracePoint p;
    p.epsilon = eps;
    p.report = carleson_sup(mf.field.threshold(eps), range, theta);
    p.diverging = p.report.diverging && !e.tail_vanishes;
    e.trace.push_back(p);
    return p.diverging;
  };

  double lo = 0.0, hi = mf.epsilon_hi;
  evaluate(hi);
  evaluate(0.0);
  if (mf.epsilon_hi > 0.0) {
    for (int it = 0; it < iterations; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (evaluate(mid))
        lo = mid;
      else
        hi = mid;
    }
  }
  e.epsilon_lo = lo;
  e.epsilon_up = hi;
  e.epsilon_star = 0.5 * (lo + hi);

  // Sorted by threshold, flags must switch at most once, from diverging to not.
  std::vector<const TracePoint*> sorted;
  for (const auto& p : e.trace) sorted.push_back(&p);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const TracePoint* a, const TracePoint* b) { return a->epsilon < b->epsilon; });
  bool seen_quiet = false;
  for (const auto* p : sorted) {
    if (!p->diverging)
      seen_quiet = true;
    else if (seen_quiet)
      e.monotone = false;
  }
  return e;
}

double estimate_ratio(const DistanceEstimate& a, const DistanceEstimate& b) {
  const bool a_zero = a.epsilon_star <= a.resolution;
  const bool b_zero = b.epsilon_star <= b.resolution;
  if (a_zero && b_zero) return 1.0;
  if (b.epsilon_star == 0.0) return std::numeric_limits<double>::infinity();
  return a.epsilon_star / b.epsilon_star;
}

MethodComparison compare_methods(const GridFunction& f, double s, LevelRange range, double theta,
                                 const MethodSettings& settings, double band) {
  MethodComparison out;
  out.band = band;
  for (std::size_t i = 0; i < kAllMethods.size(); ++i)
    out.estimates[i] = epsilon_star(f, s, kAllMethods[i], range, theta, settings);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = i + 1; k < 3; ++k) {
      const double r = estimate_ratio(out.estimates[i], out.estimates[k]);
      const bool ok = r >= 1.0 / band && r <= band;
      out.ratios.push_back({kAllMethods[i], kAllMethods[k], r, ok});
      out.all_within_band = out.all_within_band && ok;
    }
  return out;
}

InclusionReport inclusion_probe(const GridFunction& f, double s, double epsilon, Method source,
                                Method target, const std::vector<double>& c_grid,
                                const std::vector<double>& r_grid, int max_level, double eta,
                                const MethodSettings& settings) {
  for (double c : c_grid)
    if (!(c > 0.0 && c <= 1.0)) throw ValidationError("c grid must lie in (0, 1]");
  for (double r : r_grid)
    if (!(r >= 0.0 && r <= 5.0)) throw ValidationError("R grid must lie in [0, 5]");

  InclusionReport out;
  out.source = source;
  out.target = target;
  out.epsilon = epsilon;
  out.c_grid = c_grid;
  out.r_grid = r_grid;
  out.eta = eta;

  const MethodField src_field = method_field(f, s, source, max_level, settings);
  const HalfSpaceSet src = src_field.field.threshold(epsilon);
  const MethodField tgt = source == target ? src_field : method_field(f, s, target, max_level, settings);
  out.source_size = src.size();
  const auto source_cells = src.cells();

  for (double c : c_grid) {
    const HalfSpaceSet base = tgt.field.threshold(c * epsilon);
    std::vector<double> row;
    for (double r : r_grid) {
      if (source_cells.empty()) {
        row.push_back(1.0);
        continue;
      }
      const HalfSpaceSet grown = enlarge(base, r);
      std::size_t inside = 0;
      for (const auto& q : source_cells) inside += grown.contains(q.level, q.linear_index());
      row.push_back(static_cast<double>(inside) / static_cast<double>(source_cells.size()));
    }
    out.fraction.push_back(std::move(row));
  }

  for (std::size_t ri = 0; ri < r_grid.size() && !out.achieved; ++ri) {
    std::optional<double> best_c;
    for (std::size_t ci = 0; ci < c_grid.size(); ++ci)
      if (out.fraction[ci][ri] >= eta && (!best_c || c_grid[ci] > *best_c)) best_c = c_grid[ci];
    if (best_c) out.achieved = std::make_pair(*best_c, r_grid[ri]);
  }
  return out;
}

WitnessReport projection_distance_witness(const WaveletCoefficients& coeffs, double s, double epsilon) {
  if (!(epsilon >= 0.0)) throw ValidationError("threshold must be >= 0");
  WitnessReport out;
  out.epsilon = epsilon;
  const WaveletCoefficients g = truncate_projection(coeffs, s, epsilon);
  out.difference_norm = lip_wavelet_norm(coeffs - g, s);
  out.norm_bound_holds = out.difference_norm <= epsilon;

  out.coefficient_norm = wavelet_sup_term(coeffs, s);
  const int depth = coeffs.depth();
  const auto masses = carleson_box_masses(build_T(coeffs, s, epsilon, depth - 1));
  const auto sums = jbmo_box_sums(g, s);
  // Every kept cell carries up to 2^n - 1 coefficients, each with
  // 2^{2sj} c^2 <= ||c||_s^2 |P|.
  const double scale = static_cast<double>(coeffs.orientations()) * out.coefficient_norm *
                       out.coefficient_norm;
  constexpr double kRoundoff = 1e-12;

  out.box_bound_holds = true;
  for (int j = 0; j < depth; ++j) {
    const auto& sj = sums[static_cast<std::size_t>(j)];
    const auto& mj = masses[static_cast<std::size_t>(j)];
    double box_max = 0.0, bound_max = 0.0;
    for (std::size_t i = 0; i < sj.size(); ++i) {
      const double bound = scale * mj[i];
      box_max = std::max(box_max, sj[i]);
      bound_max = std::max(bound_max, bound);
      if (bound > 0.0) out.worst_ratio = std::max(out.worst_ratio, sj[i] / bound);
      if (sj[i] > bound * (1.0 + kRoundoff)) out.box_bound_holds = false;
    }
    out.box_max.push_back(box_max);
    out.bound_max.push_back(bound_max);
  }
  return out;
}

nlohmann::json to_json(const DistanceEstimate& e) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& p : e.trace)
    trace.push_back({{"eps", p.epsilon},
                     {"M_J", p.report.values},
                     {"slope", p.report.slope},
                     {"diverging", p.diverging}});
  return {{"method", method_name(e.method)},
          {"s", e.s},
          {"epsilon_star", e.epsilon_star},
          {"bracket", {e.epsilon_lo, e.epsilon_up}},
          {"epsilon_hi", e.epsilon_hi},
          {"resolution", e.resolution},
          {"iterations", e.iterations},
          {"theta", e.theta},
          {"J_range", {e.range.lo, e.range.hi}},
          {"tail_slope_log2", e.tail_slope},
          {"tail_vanishes", e.tail_vanishes},
          {"monotone", e.monotone},
          {"slope_trace", std::move(trace)}};
}

namespace {

nlohmann::json finite_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const MethodComparison& c) {
  nlohmann::json estimates = nlohmann::json::object();
  for (const auto& e : c.estimates) estimates[std::string(method_name(e.method))] = to_json(e);
  nlohmann::json ratios = nlohmann::json::object();
  for (const auto& r : c.ratios)
    ratios[std::string(method_name(r.numerator)) + "/" + std::string(method_name(r.denominator))] = {
        {"value", finite_or_null(r.value)}, {"within_band", r.within_band}};
  return {{"estimates", std::move(estimates)},
          {"ratios", std::move(ratios)},
          {"band", c.band},
          {"all_within_band", c.all_within_band}};
}

nlohmann::json to_json(const InclusionReport& r) {
  nlohmann::json achieved = nullptr;
  if (r.achieved) achieved = {{"c", r.achieved->first}, {"R", r.achieved->second}};
  return {{"source", method_name(r.source)},
          {"target", method_name(r.target)},
          {"epsilon", r.epsilon},
          {"source_size", r.source_size},
          {"c_grid", r.c_grid},
          {"R_grid", r.r_grid},
          {"fraction", r.fraction},
          {"eta", r.eta},
          {"achieved", std::move(achieved)}};
}

nlohmann::json to_json(const WitnessReport& r) {
  return {{"epsilon", r.epsilon},
          {"difference_norm", r.difference_norm},
          {"norm_bound_holds", r.norm_bound_holds},
          {"coefficient_norm", r.coefficient_norm},
          {"box_max", r.box_max},
          {"bound_max", r.bound_max},
          {"worst_ratio", r.worst_ratio},
          {"box_bound_holds", r.box_bound_holds}};
}

}  // namespace lipdist
