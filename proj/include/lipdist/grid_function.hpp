#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace lipdist {

/// Samples of a real periodic function on the dyadic lattice
/// {k 2^-depth} of the torus [0,1)^dim, dim in {1,2}.
///
/// Storage is row-major: for dim == 2 the sample at (k0, k1) lives at
/// k0 * side() + k1.
class GridFunction {
 public:
  GridFunction(int dim, int depth, std::vector<double> samples, std::string label = {});

  /// Constant-zero function on the given grid.
  static GridFunction zeros(int dim, int depth, std::string label = {});

  int dim() const noexcept { return dim_; }
  int depth() const noexcept { return depth_; }
  std::size_t side() const noexcept { return std::size_t{1} << depth_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double spacing() const noexcept { return 1.0 / static_cast<double>(side()); }

  std::span<const double> samples() const noexcept { return samples_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  double operator[](std::size_t i) const { return samples_[i]; }

  /// Periodic lookup by lattice coordinates (any integers; wrapped).
  double at(long k0, long k1 = 0) const noexcept {
    const long n = static_cast<long>(side());
    const long a = ((k0 % n) + n) % n;
    if (dim_ == 1) return samples_[static_cast<std::size_t>(a)];
    const long b = ((k1 % n) + n) % n;
    return samples_[static_cast<std::size_t>(a * n + b)];
  }

  GridFunction operator+(const GridFunction& other) const;
  GridFunction operator-(const GridFunction& other) const;
  GridFunction scaled(double factor) const;

 private:
  int dim_;
  int depth_;
  std::vector<double> samples_;
  std::string label_;
};

/// Fourier-series coefficients c_k = 2^{-n J} sum_x f(x) e^{-2 pi i k.x}
/// for integer frequencies k in (-2^{J-1}, 2^{J-1}]^n.
///
/// Coefficients are stored in FFT order (index m represents frequency m for
/// m <= side/2 and m - side otherwise), row-major for dim == 2.
class SpectralFunction {
 public:
  SpectralFunction(int dim, int depth, std::vector<std::complex<double>> coeffs);

  int dim() const noexcept { return dim_; }
  int depth() const noexcept { return depth_; }
  std::size_t side() const noexcept { return std::size_t{1} << depth_; }

  std::span<const std::complex<double>> coefficients() const noexcept { return coeffs_; }
  std::span<std::complex<double>> coefficients() noexcept { return coeffs_; }

  /// Coefficient at a signed integer frequency (wrapped into range).
  std::complex<double> coeff(long k0, long k1 = 0) const noexcept;

  /// Signed frequency represented by FFT index m.
  long frequency_of(std::size_t m) const noexcept {
    const long n = static_cast<long>(side());
    const long f = static_cast<long>(m);
    return f <= n / 2 ? f : f - n;
  }

  /// Euclidean norm |k| of the frequency stored at flat index i.
  double frequency_norm(std::size_t i) const noexcept;

 private:
  int dim_;
  int depth_;
  std::vector<std::complex<double>> coeffs_;
};

SpectralFunction to_spectral(const GridFunction& f);
GridFunction from_spectral(const SpectralFunction& F, std::string label = {});

/// Apply a radial Fourier multiplier given as a function of the integer
/// frequency norm |k| (so xi = 2 pi k). The result is real because the
/// multiplier is even in k.
template <class Multiplier>
GridFunction apply_radial_multiplier(const GridFunction& f, Multiplier&& m, std::string label = {}) {
  SpectralFunction F = to_spectral(f);
  auto c = F.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= m(F.frequency_norm(i));
  return from_spectral(F, std::move(label));
}

/// Bessel potential of order r: multiplier (1 + |xi|^2)^{-r/2}. Negative r
/// gives the inverse lift used for the bmo-Sobolev norm.
GridFunction bessel_lift(const GridFunction& f, double order);

double sup_norm(const GridFunction& f) noexcept;

}  // namespace lipdist
