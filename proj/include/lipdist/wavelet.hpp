#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "lipdist/cell_field.hpp"
#include "lipdist/grid_function.hpp"

namespace lipdist {

/// Daubechies orthonormal filter pair with p vanishing moments.
/// low: phi(x) = sqrt(2) sum_k low[k] phi(2x - k);
/// high[k] = (-1)^k low[2p - 1 - k].
struct FilterBank {
  int vanishing_moments = 0;
  std::vector<double> low;
  std::vector<double> high;

  std::size_t length() const noexcept { return low.size(); }
};

/// Supported p: 2..10.
FilterBank filter_bank(int vanishing_moments);

/// Periodized wavelet coefficients on the torus: the single level-0 scaling
/// coefficient d and c_(l, j, k) for orientations 1 <= l <= 2^n - 1,
/// levels 0 <= j < depth and k in [0, 2^j)^n.
///
/// For n = 2 the orientations are l = 1 (low along x0, high along x1),
/// l = 2 (high, low) and l = 3 (high, high).
class WaveletCoefficients {
 public:
  WaveletCoefficients(int dim, int depth);

  int dim() const noexcept { return dim_; }
  int depth() const noexcept { return depth_; }
  int orientations() const noexcept { return (1 << dim_) - 1; }

  double scaling() const noexcept { return scaling_; }
  void set_scaling(double d) noexcept { scaling_ = d; }

  double& at(int orientation, int level, std::size_t linear) {
    return detail_[static_cast<std::size_t>(level)][index(orientation, level, linear)];
  }
  double at(int orientation, int level, std::size_t linear) const {
    return detail_[static_cast<std::size_t>(level)][index(orientation, level, linear)];
  }

  /// All coefficients of one level, orientation-major.
  std::span<const double> level(int j) const { return detail_[static_cast<std::size_t>(j)]; }
  std::span<double> level(int j) { return detail_[static_cast<std::size_t>(j)]; }

  std::size_t total_count() const noexcept;
  double energy() const noexcept;  // d^2 + sum c^2

  WaveletCoefficients operator-(const WaveletCoefficients& other) const;

 private:
  std::size_t index(int orientation, int level, std::size_t linear) const noexcept {
    return static_cast<std::size_t>(orientation - 1) * cubes_at_level(dim_, level) + linear;
  }

  int dim_;
  int depth_;
  double scaling_ = 0.0;
  std::vector<std::vector<double>> detail_;
};

/// Analysis from sample values: the finest scaling coefficients are taken as
/// 2^{-nJ/2} f(k 2^-J), so Parseval reads energy = 2^{-nJ} sum f^2.
WaveletCoefficients analyze(const GridFunction& f, const FilterBank& bank);
GridFunction reconstruct(const WaveletCoefficients& coeffs, const FilterBank& bank,
                         std::string label = {});

/// sup_omega 2^{|omega| (n/2 + s)} |c_omega| (the coefficient part of the norm).
double wavelet_sup_term(const WaveletCoefficients& coeffs, double s);

/// |d| + sup_omega 2^{|omega| (n/2 + s)} |c_omega|.
double lip_wavelet_norm(const WaveletCoefficients& coeffs, double s);

/// |d| + max over dyadic Q of ((1/|Q|) sum_{omega under Q} 4^{|omega| s} c_omega^2)^{1/2}.
double jbmo_wavelet_norm(const WaveletCoefficients& coeffs, double s);

/// Squared box sums (1/|Q|) sum_{omega in Q(Q)} 4^{|omega| s} c_omega^2 for
/// every dyadic Q, indexed [level][linear].
std::vector<std::vector<double>> jbmo_box_sums(const WaveletCoefficients& coeffs, double s);

/// Per-cube max_l |c_(l,Q)| 2^{tau(Q)(n/2 + s)} for levels 0..max_level.
CellField wavelet_field(const WaveletCoefficients& coeffs, double s, int max_level);

/// T(s, f, eps): cells Q with max_l |c_(l,Q)| > eps 2^{-tau(Q)(n/2 + s)}.
HalfSpaceSet build_T(const WaveletCoefficients& coeffs, double s, double epsilon, int max_level);

/// Keeps every coefficient whose cube lies in W(s, f, eps), zeroes the rest;
/// the scaling coefficient is unchanged.
WaveletCoefficients truncate_projection(const WaveletCoefficients& coeffs, double s, double epsilon);

/// {n, J_grid, d:[...], c:[{l,j,k,value},...]}, |value| < 1e-14 omitted.
nlohmann::json to_json(const WaveletCoefficients& coeffs);

}  // namespace lipdist
