#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lipdist/dyadic.hpp"

namespace lipdist {

/// A nonnegative value per Whitney cell of levels 0..max_level: the sampled
/// maximum of a scale-normalized quantity (second differences, wavelet
/// coefficients or hyperbolic derivatives) over the cell.
class CellField {
 public:
  CellField(int dim, int max_level, double exponent, std::string label = {});

  int dim() const noexcept { return dim_; }
  int max_level() const noexcept { return max_level_; }
  double exponent() const noexcept { return exponent_; }
  const std::string& label() const noexcept { return label_; }

  double& at(int level, std::size_t linear) { return values_[static_cast<std::size_t>(level)][linear]; }
  double at(int level, std::size_t linear) const {
    return values_[static_cast<std::size_t>(level)][linear];
  }
  std::span<const double> level_values(int level) const {
    return values_[static_cast<std::size_t>(level)];
  }

  double max() const noexcept;

  /// Cells whose value strictly exceeds `epsilon` (ties excluded).
  HalfSpaceSet threshold(double epsilon) const;

  CellField scaled(double factor) const;

 private:
  int dim_;
  int max_level_;
  double exponent_;
  std::string label_;
  std::vector<std::vector<double>> values_;
};

/// CSV: level,k0[,k1],value, one row per cell.
void write_csv(std::ostream& out, const CellField& field);

}  // namespace lipdist
