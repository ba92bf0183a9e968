#include "lipdist/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "lipdist/corpus.hpp"
#include "lipdist/error.hpp"
#include "lipdist/function_spec.hpp"
#include "lipdist/hyperbolic.hpp"
#include "lipdist/poisson.hpp"

namespace lipdist {

namespace {

constexpr int kDistanceDepth = 16;
constexpr LevelRange kDistanceRange{7, 14};
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

struct Loaded {
  CorpusEntry entry;
  GridFunction f;
};

std::vector<Loaded> load_corpus(int depth, std::vector<std::string>& warnings) {
  std::vector<Loaded> out;
  for (const auto& e : default_corpus(depth)) {
    try {
      GridFunction f = synthesize(parse_function_spec(e.spec), 1, depth);
      f.set_label(e.name);
      out.push_back({e, std::move(f)});
    } catch (const ValidationError& err) {
      warnings.push_back("under-resolved: corpus entry '" + e.name + "' skipped at J_grid=" +
                         std::to_string(depth) + " (" + err.what() + ")");
    }
  }
  return out;
}

double spread(double a, double b) {
  if (a == 0.0 && b == 0.0) return 1.0;
  if (a == 0.0 || b == 0.0) return std::numeric_limits<double>::infinity();
  return std::max(a / b, b / a);
}

GridFunction random_function(int dim, int depth, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<double> v(std::size_t{1} << (dim * depth));
  for (double& x : v) x = normal(rng);
  return GridFunction(dim, depth, std::move(v), "random");
}

double max_abs_diff(const GridFunction& a, const GridFunction& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// --- 1 ---------------------------------------------------------------------

CriterionResult carleson_exactness() {
  CriterionResult r{1, "Carleson engine exact on full stacks", false, "", "", 0.0, {}};
  double worst = 0.0;
  const auto t0 = std::chrono::steady_clock::now();
  nlohmann::json rows = nlohmann::json::array();
  for (int J = 0; J <= 14; ++J) {
    const CarlesonReport rep = carleson_sup(HalfSpaceSet::full_stack(1, J), {J, J});
    const double expected = (J + 1) * std::numbers::ln2;
    worst = std::max(worst, std::abs(rep.values.front() - expected));
    rows.push_back({{"J", J}, {"M_J", rep.values.front()}, {"expected", expected}});
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.passed = worst <= 1e-12 && seconds < 1.0;
  r.observed = "max |M_J - (J+1) log 2| = " + fmt(worst) + ", " + fmt(seconds) + " s";
  r.expected = "<= 1e-12 for J <= 14, < 1 s";
  r.details = {{"rows", rows}, {"seconds", seconds}};
  return r;
}

// --- 2 ---------------------------------------------------------------------

CriterionResult wavelet_correctness(const RunConfig& config) {
  CriterionResult r{2, "wavelet round trip, Parseval, vanishing moments", false, "", "", 0.0, {}};
  double worst_rt = 0.0, worst_parseval = 0.0, worst_constant = 0.0;
  for (int p : {2, 8}) {
    const FilterBank bank = filter_bank(p);
    for (std::uint64_t k = 0; k < 20; ++k) {
      const GridFunction f = random_function(1, 12, config.seed + k);
      const WaveletCoefficients c = analyze(f, bank);
      const GridFunction g = reconstruct(c, bank);
      worst_rt = std::max(worst_rt, max_abs_diff(f, g) / sup_norm(f));
      double mean_sq = 0.0;
      for (double v : f.samples()) mean_sq += v * v;
      mean_sq /= static_cast<double>(f.size());
      worst_parseval = std::max(worst_parseval, std::abs(c.energy() - mean_sq) / mean_sq);
    }
    for (int dim : {1, 2}) {
      const int depth = dim == 1 ? 12 : 8;
      const GridFunction one(dim, depth, std::vector<double>(std::size_t{1} << (dim * depth), 3.0));
      const WaveletCoefficients c = analyze(one, bank);
      for (int j = 0; j < depth; ++j)
        for (double v : c.level(j)) worst_constant = std::max(worst_constant, std::abs(v));
    }
  }
  r.passed = worst_rt <= 1e-10 && worst_parseval <= 1e-10 && worst_constant <= 1e-10;
  r.observed = "round trip " + fmt(worst_rt) + ", Parseval " + fmt(worst_parseval) +
               ", constant details " + fmt(worst_constant);
  r.expected = "all <= 1e-10 (20 random functions, J_grid=12, p in {2, 8})";
  r.details = {{"round_trip", worst_rt}, {"parseval", worst_parseval}, {"constant_detail", worst_constant}};
  return r;
}

// --- 3 ---------------------------------------------------------------------

CriterionResult poisson_correctness(const RunConfig& config) {
  CriterionResult r{3, "Poisson extension closed forms, semigroup, finite differences", false, "", "", 0.0, {}};
  double worst_closed = 0.0;
  const int depth = 10;
  for (int k : {1, 3}) {
    const GridFunction f = synthesize(parse_function_spec("trig k=" + std::to_string(k) + " a=1"), 1, depth);
    for (double y : {0.05, 0.1, 0.3}) {
      const double decay = std::exp(-kTwoPi * k * y);
      const double xi2 = (kTwoPi * k) * (kTwoPi * k);
      const GridFunction u = poisson_extend(f, y), d2 = d2y_extension(f, y);
      for (std::size_t i = 0; i < f.size(); ++i) {
        worst_closed = std::max(worst_closed, std::abs(u[i] - decay * f[i]));
        worst_closed = std::max(worst_closed, std::abs(d2[i] - xi2 * decay * f[i]) / xi2);
      }
    }
  }
  {
    const GridFunction f = synthesize(parse_function_spec("trig k=1,2 a=1"), 2, 6);
    const double norm_k = std::sqrt(5.0), y = 0.1;
    const double decay = std::exp(-kTwoPi * norm_k * y);
    const GridFunction d2 = d2y_extension(f, y);
    for (std::size_t i = 0; i < f.size(); ++i)
      worst_closed = std::max(worst_closed, std::abs(d2[i] - kTwoPi * kTwoPi * 5.0 * decay * f[i]) /
                                                (kTwoPi * kTwoPi * 5.0));
  }

  const GridFunction g = random_function(1, depth, config.seed);
  const double semigroup =
      max_abs_diff(poisson_extend(poisson_extend(g, 0.05), 0.07), poisson_extend(g, 0.12)) / sup_norm(g);

  const GridFunction h = synthesize(parse_function_spec("sum trig k=1 a=1 + trig k=3 a=0.5 phase=0.3"), 1, depth);
  const double y = 0.1, step = 1e-4;
  const GridFunction up = poisson_extend(h, y + step), mid = poisson_extend(h, y),
                     down = poisson_extend(h, y - step), exact = d2y_extension(h, y);
  double fd = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i)
    fd = std::max(fd, std::abs((up[i] - 2.0 * mid[i] + down[i]) / (step * step) - exact[i]));
  fd /= sup_norm(exact);

  r.passed = worst_closed <= 1e-10 && semigroup <= 1e-10 && fd <= 1e-6;
  r.observed = "closed forms " + fmt(worst_closed) + ", semigroup " + fmt(semigroup) +
               ", finite difference " + fmt(fd);
  r.expected = "closed forms and semigroup <= 1e-10, finite difference <= 1e-6 relative at y = 0.1";
  r.details = {{"closed_form", worst_closed}, {"semigroup", semigroup}, {"finite_difference", fd}};
  return r;
}

// --- 4, 5 ------------------------------------------------------------------

CriterionResult seminorm_comparability(const RunConfig& config, const std::vector<Loaded>& corpus) {
  CriterionResult r{4, "second-difference, wavelet and Poisson norms comparable", false, "", "", 0.0, {}};
  const auto t0 = std::chrono::steady_clock::now();
  const MethodSettings ms = config.method_settings();
  const FilterBank bank = filter_bank(config.wavelet_p);
  double worst = 0.0;
  nlohmann::json rows = nlohmann::json::array();
  std::vector<std::string> failures;
  for (const auto& [entry, f] : corpus) {
    const WaveletCoefficients c = analyze(f, bank);
    for (double s : {0.5, 1.0}) {
      const double direct = holder_seminorm(f, s, ms.probes) + sup_norm(f);
      const double wavelet = lip_wavelet_norm(c, s);
      const double poisson = holder_poisson_norm(f, s, f.depth() - 2, ms.probes);
      const double band = std::max({spread(direct, wavelet), spread(direct, poisson), spread(wavelet, poisson)});
      worst = std::max(worst, band);
      if (!(band <= 50.0)) failures.push_back(entry.name + " s=" + fmt(s));
      rows.push_back({{"function", entry.name}, {"s", s}, {"direct", direct}, {"wavelet", wavelet},
                      {"poisson", poisson}, {"band", band}});
    }
  }
  // Probe drift: the direct seminorm with four times as many probe scales.
  nlohmann::json drift = nullptr;
  const auto rough = std::find_if(corpus.begin(), corpus.end(),
                                  [](const Loaded& l) { return l.entry.family == Family::rough; });
  if (rough != corpus.end()) {
    const GridFunction& f = rough->f;
    ProbeOptions fine = ms.probes;
    fine.scale_refinement *= 4;
    const double coarse = holder_seminorm(f, rough->entry.exponent, ms.probes),
                 refined = holder_seminorm(f, rough->entry.exponent, fine);
    drift = {{"function", rough->entry.name}, {"s", rough->entry.exponent}, {"coarse", coarse}, {"refined", refined},
             {"relative_drift", coarse > 0.0 ? (refined - coarse) / coarse : 0.0}};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.passed = !corpus.empty() && worst <= 50.0 && seconds < 120.0;
  r.observed = "band C = " + fmt(worst) + " over " + std::to_string(rows.size()) + " cases, " +
               fmt(seconds) + " s" + (failures.empty() ? "" : ", failing: " + nlohmann::json(failures).dump());
  r.expected = "C <= 50, < 120 s";
  r.details = {{"band", worst}, {"rows", rows}, {"failures", failures}, {"probe_drift", drift}, {"seconds", seconds}};
  return r;
}

CriterionResult jbmo_cross_check(const RunConfig& config, const std::vector<Loaded>& corpus) {
  CriterionResult r{5, "wavelet Jbmo norm vs bmo of the Bessel lift", false, "", "", 0.0, {}};
  const FilterBank bank = filter_bank(config.wavelet_p);
  double worst = 0.0;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [entry, f] : corpus) {
    const WaveletCoefficients c = analyze(f, bank);
    for (double s : {0.5, 1.0}) {
      const double wavelet = jbmo_wavelet_norm(c, s);
      const double direct = jbmo_direct_norm(f, s, f.depth());
      const double band = spread(wavelet, direct);
      worst = std::max(worst, band);
      rows.push_back({{"function", entry.name}, {"s", s}, {"wavelet", wavelet}, {"direct", direct}, {"band", band}});
    }
  }
  r.passed = !corpus.empty() && worst <= 50.0;
  r.observed = "band C = " + fmt(worst) + " over " + std::to_string(rows.size()) + " cases";
  r.expected = "C <= 50";
  r.details = {{"band", worst}, {"rows", rows}};
  return r;
}

// --- 6 ---------------------------------------------------------------------

CriterionResult projection_mechanics(const RunConfig& config, const std::vector<Loaded>& corpus) {
  CriterionResult r{6, "truncation projection bounds", false, "", "", 0.0, {}};
  const FilterBank bank = filter_bank(config.wavelet_p);
  std::size_t cases = 0, norm_fail = 0, box_fail = 0;
  double worst_ratio = 0.0;
  for (const auto& [entry, f] : corpus) {
    const WaveletCoefficients c = analyze(f, bank);
    for (double s : {0.5, 1.0}) {
      const double hi = wavelet_sup_term(c, s);
      for (double frac : {0.25, 0.5, 0.75}) {
        const WitnessReport w = projection_distance_witness(c, s, frac * hi);
        ++cases;
        norm_fail += !w.norm_bound_holds;
        box_fail += !w.box_bound_holds;
        worst_ratio = std::max(worst_ratio, w.worst_ratio);
      }
    }
  }
  r.passed = !corpus.empty() && norm_fail == 0 && box_fail == 0;
  r.observed = std::to_string(cases) + " cases, norm bound failures " + std::to_string(norm_fail) +
               ", box bound failures " + std::to_string(box_fail) + ", worst box/bound " + fmt(worst_ratio);
  r.expected = "no failures at eps in {0.25, 0.5, 0.75} * eps_hi";
  r.details = {{"cases", cases}, {"norm_failures", norm_fail}, {"box_failures", box_fail},
               {"worst_box_ratio", worst_ratio}};
  return r;
}

// --- 7 ---------------------------------------------------------------------

CriterionResult distance_separation(const RunConfig& config, const std::vector<Loaded>& corpus) {
  CriterionResult r{7, "distance separation across the three methods", false, "", "", 0.0, {}};
  const auto t0 = std::chrono::steady_clock::now();
  const MethodSettings ms = config.method_settings();
  std::vector<std::string> failures;
  nlohmann::json rows = nlohmann::json::array();
  double worst_band = 1.0, min_rough = std::numeric_limits<double>::infinity();
  std::size_t cases = 0;

  for (const auto& [entry, f] : corpus) {
    std::vector<double> exponents;
    if (entry.family == Family::rough)
      exponents = {entry.exponent};
    else if (entry.family == Family::smooth || entry.family == Family::atom)
      exponents = {0.5, 1.0};
    for (double s : exponents) {
      const MethodComparison cmp = compare_methods(f, s, kDistanceRange, config.theta, ms, config.band);
      ++cases;
      nlohmann::json row = {{"function", entry.name}, {"family", family_name(entry.family)}, {"s", s}};
      for (const auto& e : cmp.estimates) {
        const double rel = e.epsilon_hi > 0.0 ? e.epsilon_star / e.epsilon_hi : 0.0;
        row[std::string(method_name(e.method))] = {{"epsilon_star", e.epsilon_star},
                                                   {"epsilon_hi", e.epsilon_hi},
                                                   {"relative", rel},
                                                   {"resolution", e.resolution},
                                                   {"monotone", e.monotone}};
        const std::string tag = entry.name + " s=" + fmt(s) + " " + std::string(method_name(e.method));
        if (entry.family == Family::rough) {
          min_rough = std::min(min_rough, rel);
          if (!(rel > 0.05)) failures.push_back(tag + ": eps0/eps_hi = " + fmt(rel));
        } else if (!(e.epsilon_star <= e.resolution)) {
          failures.push_back(tag + ": eps0 = " + fmt(e.epsilon_star) + " above resolution " + fmt(e.resolution));
        }
      }
      for (const auto& ratio : cmp.ratios) {
        worst_band = std::max(worst_band, std::max(ratio.value, 1.0 / ratio.value));
        if (!ratio.within_band)
          failures.push_back(entry.name + " s=" + fmt(s) + " ratio " + std::string(method_name(ratio.numerator)) +
                             "/" + std::string(method_name(ratio.denominator)) + " = " + fmt(ratio.value));
      }
      row["ratios"] = to_json(cmp)["ratios"];
      rows.push_back(std::move(row));
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.passed = cases > 0 && failures.empty() && seconds < 600.0;
  r.observed = std::to_string(cases) + " cases, min rough eps0/eps_hi " + fmt(min_rough) +
               ", worst pairwise spread " + fmt(worst_band) + ", " + fmt(seconds) + " s" +
               (failures.empty() ? "" : ", " + std::to_string(failures.size()) + " failures");
  r.expected = "rough > 0.05, smooth and atoms below resolution, ratios within [1/" + fmt(config.band) +
               ", " + fmt(config.band) + "], < 600 s";
  r.details = {{"J_grid", kDistanceDepth}, {"J_range", {kDistanceRange.lo, kDistanceRange.hi}},
               {"rows", rows}, {"failures", failures}, {"seconds", seconds}};
  return r;
}

// --- 8 ---------------------------------------------------------------------

CriterionResult dilation_stability(const RunConfig& config, const std::vector<Loaded>& corpus) {
  CriterionResult r{8, "divergence flags invariant under enlargement", false, "", "", 0.0, {}};
  const MethodSettings ms = config.method_settings();
  std::size_t checks = 0;
  std::vector<nlohmann::json> flips;
  for (const auto& [entry, f] : corpus) {
    for (double s : {0.5, 1.0}) {
      for (Method m : kAllMethods) {
        const MethodField mf = method_field(f, s, m, kDistanceRange.hi, ms);
        // The enlarged set is the superlevel set of the field maximized over
        // hyperbolic neighbourhoods, whose per-level maxima decay like the
        // field's own; the tail judgement carries over unchanged.
        const bool vanishing = field_tail_slope(mf.field, kDistanceRange) < -ms.tail_decay;
        for (double frac : {0.25, 0.5, 0.75}) {
          const HalfSpaceSet set = mf.field.threshold(frac * mf.epsilon_hi);
          const CarlesonReport base = carleson_sup(set, kDistanceRange, config.theta);
          const bool flag = base.diverging && !vanishing;
          for (double radius : {0.5, 1.0, 2.0}) {
            const CarlesonReport grown = carleson_sup(enlarge(set, radius), kDistanceRange, config.theta);
            ++checks;
            if ((grown.diverging && !vanishing) != flag)
              flips.push_back({{"function", entry.name}, {"s", s}, {"method", method_name(m)},
                               {"eps_fraction", frac}, {"R", radius}, {"cells", set.size()},
                               {"slope", base.slope}, {"slope_enlarged", grown.slope}});
          }
        }
      }
    }
  }
  r.passed = checks > 0 && flips.empty();
  r.observed = std::to_string(flips.size()) + " flag changes in " + std::to_string(checks) + " checks";
  r.expected = "0 changes (sets at {0.25, 0.5, 0.75} * eps_hi, R in {0.5, 1, 2})";
  r.details = {{"J_grid", kDistanceDepth}, {"J_range", {kDistanceRange.lo, kDistanceRange.hi}},
               {"checks", checks}, {"flips", flips}};
  return r;
}

// --- 9 ---------------------------------------------------------------------

CriterionResult inclusion_probes(const RunConfig& config) {
  CriterionResult r{9, "inclusions T in S, S in D, D in T", false, "", "", 0.0, {}};
  const MethodSettings ms = config.method_settings();
  const GridFunction f = synthesize(
      parse_function_spec("weierstrass s=1 levels=" + std::to_string(kDistanceDepth - 2)), 1, kDistanceDepth);
  const std::pair<Method, Method> pairs[] = {
      {Method::wavelet, Method::secdiff}, {Method::secdiff, Method::poisson}, {Method::poisson, Method::wavelet}};
  nlohmann::json reports = nlohmann::json::array();
  std::string observed;
  bool ok = true;
  for (const auto& [source, target] : pairs) {
    const DistanceEstimate est = epsilon_star(f, 1.0, source, kDistanceRange, config.theta, ms);
    const InclusionReport rep = inclusion_probe(f, 1.0, 0.5 * est.epsilon_star, source, target,
                                                {1.0, 0.5, 0.25, 0.125}, {0.5, 1.0, 2.0, 4.0},
                                                kDistanceRange.hi, config.eta, ms);
    ok = ok && rep.achieved.has_value();
    if (!observed.empty()) observed += ", ";
    observed += std::string(method_name(source)) + " in " + std::string(method_name(target)) + ": " +
                (rep.achieved ? "c=" + fmt(rep.achieved->first) + " R=" + fmt(rep.achieved->second)
                              : std::string("not achieved"));
    reports.push_back(to_json(rep));
  }
  r.passed = ok;
  r.observed = observed;
  r.expected = "each achieved at fraction >= " + fmt(config.eta) + " for some c in {1, 1/2, 1/4, 1/8}, R in {0.5, 1, 2, 4}";
  r.details = {{"function", "weierstrass s=1"}, {"J_grid", kDistanceDepth}, {"reports", reports}};
  return r;
}

// --- 10 --------------------------------------------------------------------

CriterionResult continuity_stability(const RunConfig& config, const std::vector<Loaded>& corpus) {
  CriterionResult r{10, "continuity ratio maxima finite and stable", false, "", "", 0.0, {}};
  const MethodSettings ms = config.method_settings();
  constexpr std::size_t kPairs = 10000;
  double worst = 0.0;
  bool finite = true;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [entry, f] : corpus) {
    for (double s : {0.5, 1.0}) {
      const double d1 = continuity_check(f, s, kPairs, config.seed, ms.probes).max_ratio;
      const double d2 = continuity_check(f, s, 2 * kPairs, config.seed, ms.probes).max_ratio;
      const double p1 = lipschitz_check(f, s, kPairs, config.seed).max_ratio;
      const double p2 = lipschitz_check(f, s, 2 * kPairs, config.seed).max_ratio;
      finite = finite && std::isfinite(d1) && std::isfinite(d2) && std::isfinite(p1) && std::isfinite(p2);
      const double change = std::max(std::abs(d2 - d1) / d1, std::abs(p2 - p1) / p1);
      worst = std::max(worst, change);
      rows.push_back({{"function", entry.name}, {"s", s}, {"differences", {d1, d2}},
                      {"poisson", {p1, p2}}, {"relative_change", change}});
    }
  }
  r.passed = !corpus.empty() && finite && worst <= 0.2;
  r.observed = std::string(finite ? "all finite" : "non-finite maxima") + ", worst change under doubling " + fmt(worst);
  r.expected = "finite, change <= 0.2 (1e4 vs 2e4 pairs)";
  r.details = {{"rows", rows}, {"worst_change", worst}};
  return r;
}

}  // namespace

bool ValidationSummary::all_passed() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.passed; });
}

std::vector<int> all_criteria() { return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}; }

ValidationSummary run_validation(const RunConfig& config, const std::vector<int>& which,
                                 const std::function<void(const CriterionResult&)>& on_result) {
  config.validate();
  ValidationSummary summary;
  if (config.n != 1) summary.warnings.push_back("the acceptance suite is one-dimensional; n is ignored");
  if (config.jgrid < 10)
    summary.warnings.push_back("under-resolved: J_grid=" + std::to_string(config.jgrid) +
                               " leaves too few scales for the corpus criteria (use >= 10)");

  std::vector<Loaded> corpus, distance_corpus;
  auto needs = [&](std::initializer_list<int> ids) {
    return std::any_of(which.begin(), which.end(),
                       [&](int w) { return std::find(ids.begin(), ids.end(), w) != ids.end(); });
  };
  if (needs({4, 5, 6, 10})) corpus = load_corpus(config.jgrid, summary.warnings);
  if (needs({7, 8})) distance_corpus = load_corpus(kDistanceDepth, summary.warnings);

  for (int id : which) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    switch (id) {
      case 1: r = carleson_exactness(); break;
      case 2: r = wavelet_correctness(config); break;
      case 3: r = poisson_correctness(config); break;
      case 4: r = seminorm_comparability(config, corpus); break;
      case 5: r = jbmo_cross_check(config, corpus); break;
      case 6: r = projection_mechanics(config, corpus); break;
      case 7: r = distance_separation(config, distance_corpus); break;
      case 8: r = dilation_stability(config, distance_corpus); break;
      case 9: r = inclusion_probes(config); break;
      case 10: r = continuity_stability(config, corpus); break;
      default: throw ValidationError("unknown criterion " + std::to_string(id));
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (on_result) on_result(r);
    summary.criteria.push_back(std::move(r));
  }
  return summary;
}

nlohmann::json to_json(const CriterionResult& r) {
  return {{"id", r.id},           {"title", r.title},       {"passed", r.passed},
          {"observed", r.observed}, {"expected", r.expected}, {"seconds", r.seconds},
          {"details", r.details}};
}

nlohmann::json to_json(const ValidationSummary& s) {
  nlohmann::json criteria = nlohmann::json::array();
  for (const auto& c : s.criteria) criteria.push_back(to_json(c));
  return {{"all_passed", s.all_passed()}, {"warnings", s.warnings}, {"criteria", std::move(criteria)}};
}

std::string summary_line(const CriterionResult& r) {
  return "criterion " + std::to_string(r.id) + ": " + (r.passed ? "PASS" : "FAIL") + "  " + r.title +
         " (observed " + r.observed + "; expected " + r.expected + ")";
}

}  // namespace lipdist
