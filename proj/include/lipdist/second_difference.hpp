#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lipdist/cell_field.hpp"
#include "lipdist/grid_function.hpp"

namespace lipdist {

struct ProbeOptions {
  int directions = 8;       // K; ignored for n = 1
  int probes_per_axis = 8;  // x-probes per cell axis (stride coarsening)
  int scale_refinement = 1; // extra probe scales per octave for holder_seminorm
};

/// Lattice offsets h with |h| ~ step (in grid units) used by the maximal
/// second difference: {step} for n = 1; for n = 2 one lattice vector per
/// direction angle pi i / K whose norm is within 2% of step.
std::vector<std::array<long, 2>> difference_offsets(int dim, long step, int directions);

/// max over directions of |f(x+h) - 2 f(x) + f(x-h)| with |h| = y, periodic.
/// `y` must be a positive multiple of the grid spacing.
double second_difference(const GridFunction& f, std::array<long, 2> point, double y,
                         int directions = 8);

/// Probe maximum of Delta_2 f(x, y) / y^s over all grid points and the
/// dyadic scales y = 2^-j, j = 1..depth-1 (refined per ProbeOptions).
double holder_seminorm(const GridFunction& f, double s, const ProbeOptions& options = {});

/// Per-cell maximum of Delta_2 f(x, y) / y^s over the cell's probes:
/// x at stride-coarsened grid points of Q, y in {5/8, 3/4, 7/8, 1} l(Q)
/// (rounded to the grid). Requires max_level <= depth - 2.
CellField second_difference_field(const GridFunction& f, double s, int max_level,
                                  const ProbeOptions& options = {});

/// S(s, f, eps): cells whose probe maximum of Delta_2 f / y^s exceeds eps.
HalfSpaceSet build_S(const GridFunction& f, double s, double epsilon, int max_level,
                     const ProbeOptions& options = {});

struct ContinuityReport {
  double max_ratio = 0.0;
  std::size_t pairs = 0;
  double norm = 0.0;  // holder_seminorm + sup_norm
};

/// Samples admissible pairs (1/2 < y/y' < 2, and |x - x'| < y/2 when s = 1)
/// and returns the largest |Delta_2 f(x,y) - Delta_2 f(x',y')| divided by
/// norm * modulus, with modulus |dx|^s + |dy|^s for s < 1 and
/// |dx| log(e + y/|dx|) + |dy| log(e + y/|dy|) for s = 1.
ContinuityReport continuity_check(const GridFunction& f, double s, std::size_t sample_count,
                                  std::uint64_t seed, const ProbeOptions& options = {});

}  // namespace lipdist
