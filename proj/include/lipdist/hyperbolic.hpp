#pragma once

#include <array>

#include "lipdist/dyadic.hpp"

namespace lipdist {

/// Point (x, y) of the upper half-space over the torus; y > 0. Unused
/// coordinates of x are zero for n = 1.
struct HalfSpacePoint {
  std::array<double, 2> x{0.0, 0.0};
  double y = 1.0;
};

/// Distance for ds^2 = (dx^2 + dy^2) / y^2 with x measured on the torus:
/// arccosh(1 + (|x - x'|^2 + (y - y')^2) / (2 y y')).
double hyperbolic_distance(const HalfSpacePoint& p, const HalfSpacePoint& q);

/// Center of the Whitney cell over q: (center of q, 3 l(q) / 4).
HalfSpacePoint cell_center(const DyadicCube& q) noexcept;

/// Scale-invariant bound on the hyperbolic diameter of a Whitney cell,
/// arccosh(1 + 2 (n + 1/4)).
double whitney_cell_radius(int dim) noexcept;

/// Cell discretization of the hyperbolic R-neighbourhood A_R: every cell of
/// level <= A.max_level() whose center is within R + whitney_cell_radius of
/// some cell center of A.
HalfSpaceSet enlarge(const HalfSpaceSet& set, double radius);

}  // namespace lipdist
