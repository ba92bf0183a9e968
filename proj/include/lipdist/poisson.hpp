#pragma once

#include <cstdint>

#include "lipdist/cell_field.hpp"
#include "lipdist/grid_function.hpp"
#include "lipdist/second_difference.hpp"

namespace lipdist {

/// u(., y) = P_y * f on the torus: spectral multiplier e^{-2 pi |k| y}.
GridFunction poisson_extend(const GridFunction& f, double y);

/// d^2 u / dy^2 (., y): multiplier (2 pi |k|)^2 e^{-2 pi |k| y}.
GridFunction d2y_extension(const GridFunction& f, double y);

/// Per-cell maximum of y^{2-s} |d^2 u / dy^2| over the cell's probes: heights
/// {5/8, 3/4, 7/8, 1} l(Q) and x at the same stride-coarsened grid points as
/// second_difference_field.
CellField derivative_field(const GridFunction& f, double s, int max_level,
                           const ProbeOptions& options = {});

/// sup|f| + max over Whitney probe points of y^{2-s} |d^2 u / dy^2|.
double holder_poisson_norm(const GridFunction& f, double s, int max_level,
                           const ProbeOptions& options = {});

/// D(s, f, eps): cells where y^{2-s} |d^2 u / dy^2| exceeds eps on some probe.
HalfSpaceSet build_D(const GridFunction& f, double s, double epsilon, int max_level,
                     const ProbeOptions& options = {});

struct LipschitzReport {
  double max_ratio = 0.0;
  std::size_t pairs = 0;
  double norm = 0.0;  // holder_poisson_norm
};

/// Samples pairs of points at hyperbolic distance in (0, 2] and returns the
/// largest |g(p) - g(q)| / (norm * rho(p, q)) for g = y^{2-s} d^2u/dy^2.
LipschitzReport lipschitz_check(const GridFunction& f, double s, std::size_t sample_count,
                                std::uint64_t seed);

/// Dyadic bmo norm: sup over cubes of level <= max_level of the L^2 mean
/// oscillation, plus the L^2 norm over the unit cube.
double bmo_norm(const GridFunction& f, int max_level);

/// bmo_norm(bessel_lift(f, -s), max_level).
double jbmo_direct_norm(const GridFunction& f, double s, int max_level);

}  // namespace lipdist
