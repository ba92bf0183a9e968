#include "lipdist/cell_field.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <ostream>

#include "lipdist/error.hpp"

namespace lipdist {

CellField::CellField(int dim, int max_level, double exponent, std::string label)
    : dim_(dim), max_level_(max_level), exponent_(exponent), label_(std::move(label)) {
  if (dim != 1 && dim != 2) throw ValidationError("dimension must be 1 or 2");
  if (max_level < 0) throw ValidationError("max level must be >= 0");
  for (int j = 0; j <= max_level; ++j) values_.emplace_back(cubes_at_level(dim, j), 0.0);
}

double CellField::max() const noexcept {
  double m = 0.0;
  for (const auto& level : values_)
    for (double v : level) m = std::max(m, v);
  return m;
}

HalfSpaceSet CellField::threshold(double epsilon) const {
  if (!(epsilon >= 0.0)) throw ValidationError("threshold must be >= 0");
  HalfSpaceSet set(dim_, max_level_);
  for (int j = 0; j <= max_level_; ++j) {
    const auto& level = values_[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < level.size(); ++i)
      if (level[i] > epsilon) set.insert(j, i);
  }
  return set;
}

CellField CellField::scaled(double factor) const {
  CellField out = *this;
  for (auto& level : out.values_)
    for (double& v : level) v *= factor;
  return out;
}

void write_csv(std::ostream& out, const CellField& field) {
  out << (field.dim() == 1 ? "level,k0,value\n" : "level,k0,k1,value\n");
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  for (int j = 0; j <= field.max_level(); ++j) {
    const auto values = field.level_values(j);
    for (std::size_t i = 0; i < values.size(); ++i) {
      const DyadicCube q = DyadicCube::from_linear(field.dim(), j, i);
      out << j << ',' << q.index[0];
      if (field.dim() == 2) out << ',' << q.index[1];
      out << ',' << values[i] << '\n';
    }
  }
  out.precision(old);
}

}  // namespace lipdist
