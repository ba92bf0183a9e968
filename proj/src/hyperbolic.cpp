#include "lipdist/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lipdist/error.hpp"

namespace lipdist {

namespace {

double torus_delta(double a, double b) noexcept {
  double d = std::abs(a - b);
  d -= std::floor(d);
  return std::min(d, 1.0 - d);
}

// Integer range [first, last] of cell indices at spacing h whose centers are
// within `reach` of `center` on the circle; clipped to one full period.
struct IndexWindow {
  long first;
  long count;
};

IndexWindow window(double center, double reach, double h, long cells) noexcept {
  const long first = static_cast<long>(std::ceil((center - reach) / h - 0.5));
  const long last = static_cast<long>(std::floor((center + reach) / h - 0.5));
  const long count = std::min(last - first + 1, cells);
  return {first, std::max(count, 0L)};
}

long wrap(long k, long n) noexcept { return ((k % n) + n) % n; }

}  // namespace

double hyperbolic_distance(const HalfSpacePoint& p, const HalfSpacePoint& q) {
  if (!(p.y > 0.0) || !(q.y > 0.0)) throw ValidationError("half-space points need y > 0");
  const double dx0 = torus_delta(p.x[0], q.x[0]);
  const double dx1 = torus_delta(p.x[1], q.x[1]);
  const double dy = p.y - q.y;
  const double arg = (dx0 * dx0 + dx1 * dx1 + dy * dy) / (2.0 * p.y * q.y);
  // acosh(1 + a) = log1p(a + sqrt(a (a + 2))) keeps precision for small a.
  return std::log1p(arg + std::sqrt(arg * (arg + 2.0)));
}

HalfSpacePoint cell_center(const DyadicCube& q) noexcept {
  const double side = q.side();
  HalfSpacePoint p;
  p.x[0] = (q.index[0] + 0.5) * side;
  if (q.dim == 2) p.x[1] = (q.index[1] + 0.5) * side;
  p.y = 0.75 * side;
  return p;
}

double whitney_cell_radius(int dim) noexcept { return std::acosh(1.0 + 2.0 * (dim + 0.25)); }

HalfSpaceSet enlarge(const HalfSpaceSet& set, double radius) {
  if (!(radius >= 0.0)) throw ValidationError("enlarge radius must be >= 0");
  const int n = set.dim();
  const int top = set.max_level();
  const double reach = radius + whitney_cell_radius(n);
  const double cosh_reach = std::cosh(reach);
  const int level_span = static_cast<int>(std::floor(reach / std::numbers::ln2));

  HalfSpaceSet out(n, top);
  for (const DyadicCube& src : set.cells()) {
    const HalfSpacePoint c = cell_center(src);
    const int lo = std::max(0, src.level - level_span);
    const int hi = std::min(top, src.level + level_span);
    for (int j = lo; j <= hi; ++j) {
      const double h = std::ldexp(1.0, -j);
      const double yt = 0.75 * h;
      const double d2 = 2.0 * c.y * yt * (cosh_reach - 1.0) - (c.y - yt) * (c.y - yt);
      if (d2 < 0.0) continue;
      const double horizontal = std::sqrt(d2);
      const long cells = 1L << j;
      const IndexWindow w0 = window(c.x[0], horizontal, h, cells);
      const IndexWindow w1 = n == 2 ? window(c.x[1], horizontal, h, cells) : IndexWindow{0, 1};
      for (long a = 0; a < w0.count; ++a) {
        const long k0 = wrap(w0.first + a, cells);
        for (long b = 0; b < w1.count; ++b) {
          const long k1 = n == 2 ? wrap(w1.first + b, cells) : 0;
          const std::size_t linear =
              n == 1 ? static_cast<std::size_t>(k0) : static_cast<std::size_t>((k0 << j) + k1);
          if (out.contains(j, linear)) continue;
          const DyadicCube q = DyadicCube::from_linear(n, j, linear);
          if (hyperbolic_distance(c, cell_center(q)) < reach) out.insert(j, linear);
        }
      }
    }
  }
  return out;
}

}  // namespace lipdist
