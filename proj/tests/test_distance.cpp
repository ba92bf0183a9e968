#include <doctest.h>

#include <cmath>

#include "lipdist/corpus.hpp"
#include "lipdist/distance.hpp"
#include "lipdist/error.hpp"
#include "lipdist/function_spec.hpp"
#include "lipdist/hyperbolic.hpp"
#include "lipdist/poisson.hpp"

using namespace lipdist;

namespace {

constexpr int kDepth = 14;
constexpr LevelRange kRange{6, 12};

GridFunction make(const std::string& text, int depth = kDepth) {
  return synthesize(parse_function_spec(text), 1, depth);
}

}  // namespace

TEST_CASE("method names round trip") {
  for (Method m : kAllMethods) CHECK(parse_method(method_name(m)) == m);
  CHECK_THROWS_AS(parse_method("fourier"), ValidationError);
}

TEST_CASE("method fields agree with the owning modules") {
  const GridFunction f = make("weierstrass s=0.5 levels=12");
  const MethodField sd = method_field(f, 0.5, Method::secdiff, 10);
  CHECK(sd.field.threshold(0.4) == build_S(f, 0.5, 0.4, 10));
  const MethodField po = method_field(f, 0.5, Method::poisson, 10);
  CHECK(po.field.threshold(0.4) == build_D(f, 0.5, 0.4, 10));
  CHECK(po.epsilon_hi == doctest::Approx(po.field.max()));
  const MethodField wv = method_field(f, 0.5, Method::wavelet, 10);
  const WaveletCoefficients c = analyze(f, filter_bank(8));
  CHECK(wv.field.threshold(0.4) == build_T(c, 0.5, 0.4, 10));
  CHECK(wv.epsilon_hi == doctest::Approx(wavelet_sup_term(c, 0.5)));
}

TEST_CASE("tail slope of a geometric field") {
  CellField field(1, 10, 1.0);
  for (int j = 0; j <= 10; ++j) field.at(j, 0) = std::exp2(-0.75 * j);
  CHECK(field_tail_slope(field, {4, 10}) == doctest::Approx(-0.75).epsilon(1e-12));
}

TEST_CASE("wavelet atoms sit at distance zero") {
  const GridFunction f = make("wavelet-atom l=1 j=5 k=11");
  for (Method m : kAllMethods) {
    const DistanceEstimate e = epsilon_star(f, 1.0, m, kRange);
    CHECK(e.epsilon_star <= e.resolution);
    CHECK(e.resolution == doctest::Approx(e.epsilon_hi * std::exp2(-20.0)));
  }
}

TEST_CASE("a Weierstrass function at its own exponent is far from Jbmo") {
  const GridFunction f = make("weierstrass s=1 levels=12");
  for (Method m : kAllMethods) {
    const DistanceEstimate e = epsilon_star(f, 1.0, m, kRange);
    CHECK(e.epsilon_star > 0.05 * e.epsilon_hi);
    CHECK(e.epsilon_star <= e.epsilon_hi);
    CHECK(e.epsilon_up - e.epsilon_lo == doctest::Approx(e.resolution));
    // The flag at the upper end of the bracket agrees with a fresh evaluation.
    const MethodField mf = method_field(f, 1.0, m, kRange.hi);
    const CarlesonReport above = carleson_sup(mf.field.threshold(e.epsilon_up), kRange);
    CHECK_FALSE((above.diverging && !e.tail_vanishes));
  }
}

TEST_CASE("ratios treat two unresolved estimates as equal") {
  DistanceEstimate a, b;
  a.resolution = b.resolution = 1e-6;
  a.epsilon_star = 1e-7;
  b.epsilon_star = 5e-7;
  CHECK(estimate_ratio(a, b) == 1.0);
  b.epsilon_star = 0.1;
  CHECK(estimate_ratio(a, b) == doctest::Approx(1e-6));
  a.epsilon_star = 0.2;
  CHECK(estimate_ratio(a, b) == doctest::Approx(2.0));
}

TEST_CASE("a set is covered by itself") {
  const GridFunction f = make("weierstrass s=1 levels=12");
  const InclusionReport r =
      inclusion_probe(f, 1.0, 1.0, Method::secdiff, Method::secdiff, {1.0, 0.5}, {0.0, 1.0}, kRange.hi);
  CHECK(r.fraction[0][0] == 1.0);
  REQUIRE(r.achieved.has_value());
  CHECK(r.achieved->first == 1.0);
  CHECK(r.achieved->second == 0.0);
  CHECK_THROWS_AS(inclusion_probe(f, 1.0, 1.0, Method::secdiff, Method::wavelet, {1.5}, {1.0}, kRange.hi),
                  ValidationError);
  CHECK_THROWS_AS(inclusion_probe(f, 1.0, 1.0, Method::secdiff, Method::wavelet, {1.0}, {6.0}, kRange.hi),
                  ValidationError);
}

TEST_CASE("coverage fractions grow with the radius and the threshold factor") {
  const GridFunction f = make("weierstrass s=1 levels=12");
  const InclusionReport r = inclusion_probe(f, 1.0, 1.0, Method::wavelet, Method::poisson, {1.0, 0.25},
                                            {0.5, 2.0}, kRange.hi);
  CHECK(r.fraction[0][1] >= r.fraction[0][0]);
  CHECK(r.fraction[1][0] >= r.fraction[0][0]);
  // Direct check of one entry against the sets themselves.
  const HalfSpaceSet source = method_field(f, 1.0, Method::wavelet, kRange.hi).field.threshold(1.0);
  const HalfSpaceSet covering =
      enlarge(method_field(f, 1.0, Method::poisson, kRange.hi).field.threshold(0.25), 2.0);
  std::size_t inside = 0;
  for (const auto& q : source.cells()) inside += covering.contains(q);
  CHECK(r.fraction[1][1] == doctest::Approx(double(inside) / double(source.size())));
}

TEST_CASE("projection witness bounds hold on the corpus") {
  for (const auto& entry : default_corpus(12)) {
    const WaveletCoefficients c = analyze(make(entry.spec, 12), filter_bank(8));
    const WitnessReport w = projection_distance_witness(c, 1.0, 0.5 * wavelet_sup_term(c, 1.0));
    CHECK(w.norm_bound_holds);
    CHECK(w.box_bound_holds);
    CHECK(w.difference_norm == doctest::Approx(lip_wavelet_norm(c - truncate_projection(c, 1.0, w.epsilon), 1.0)));
  }
}

TEST_CASE("the default corpus synthesizes") {
  const auto corpus = default_corpus(12);
  CHECK(corpus.size() == 12);
  for (const auto& entry : corpus) CHECK_NOTHROW(make(entry.spec, 12));
}
