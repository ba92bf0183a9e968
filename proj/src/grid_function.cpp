#include "lipdist/grid_function.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lipdist/error.hpp"

namespace lipdist {

namespace {

void check_shape(int dim, int depth) {
  if (dim != 1 && dim != 2) throw ValidationError("dimension must be 1 or 2");
  const int max_depth = dim == 1 ? 20 : 11;
  if (depth < 4 || depth > max_depth)
    throw ValidationError("grid depth " + std::to_string(depth) + " outside [4, " +
                          std::to_string(max_depth) + "] for n=" + std::to_string(dim));
}

// In-place complex DFT with sign -1 (forward) or +1 (backward), unnormalized.
void dft(std::vector<std::complex<double>>& data, int dim, std::size_t side, int sign) {
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  const int n = static_cast<int>(side);
  fftw_plan plan = dim == 1 ? fftw_plan_dft_1d(n, ptr, ptr, sign, FFTW_ESTIMATE)
                            : fftw_plan_dft_2d(n, n, ptr, ptr, sign, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
}

}  // namespace

GridFunction::GridFunction(int dim, int depth, std::vector<double> samples, std::string label)
    : dim_(dim), depth_(depth), samples_(std::move(samples)), label_(std::move(label)) {
  check_shape(dim, depth);
  const std::size_t expected = std::size_t{1} << (dim * depth);
  if (samples_.size() != expected)
    throw ValidationError("expected " + std::to_string(expected) + " samples, got " +
                          std::to_string(samples_.size()));
  if (!std::all_of(samples_.begin(), samples_.end(), [](double v) { return std::isfinite(v); }))
    throw ValidationError("samples must be finite");
}

GridFunction GridFunction::zeros(int dim, int depth, std::string label) {
  check_shape(dim, depth);
  return GridFunction(dim, depth, std::vector<double>(std::size_t{1} << (dim * depth), 0.0),
                      std::move(label));
}

GridFunction GridFunction::operator+(const GridFunction& other) const {
  if (other.dim_ != dim_ || other.depth_ != depth_)
    throw ValidationError("grid mismatch in sum");
  std::vector<double> out(samples_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.samples_[i];
  return GridFunction(dim_, depth_, std::move(out), label_);
}

GridFunction GridFunction::operator-(const GridFunction& other) const {
  return *this + other.scaled(-1.0);
}

GridFunction GridFunction::scaled(double factor) const {
  std::vector<double> out(samples_);
  for (double& v : out) v *= factor;
  return GridFunction(dim_, depth_, std::move(out), label_);
}

SpectralFunction::SpectralFunction(int dim, int depth, std::vector<std::complex<double>> coeffs)
    : dim_(dim), depth_(depth), coeffs_(std::move(coeffs)) {
  check_shape(dim, depth);
  if (coeffs_.size() != (std::size_t{1} << (dim * depth)))
    throw ValidationError("spectral coefficient count does not match grid");
}

std::complex<double> SpectralFunction::coeff(long k0, long k1) const noexcept {
  const long n = static_cast<long>(side());
  const long a = ((k0 % n) + n) % n;
  if (dim_ == 1) return coeffs_[static_cast<std::size_t>(a)];
  const long b = ((k1 % n) + n) % n;
  return coeffs_[static_cast<std::size_t>(a * n + b)];
}

double SpectralFunction::frequency_norm(std::size_t i) const noexcept {
  if (dim_ == 1) return std::abs(static_cast<double>(frequency_of(i)));
  const double a = static_cast<double>(frequency_of(i / side()));
  const double b = static_cast<double>(frequency_of(i % side()));
  return std::hypot(a, b);
}

SpectralFunction to_spectral(const GridFunction& f) {
  std::vector<std::complex<double>> data(f.samples().begin(), f.samples().end());
  dft(data, f.dim(), f.side(), FFTW_FORWARD);
  const double norm = 1.0 / static_cast<double>(f.size());
  for (auto& c : data) c *= norm;
  return SpectralFunction(f.dim(), f.depth(), std::move(data));
}

GridFunction from_spectral(const SpectralFunction& F, std::string label) {
  std::vector<std::complex<double>> data(F.coefficients().begin(), F.coefficients().end());
  dft(data, F.dim(), F.side(), FFTW_BACKWARD);
  std::vector<double> out(data.size());
  std::transform(data.begin(), data.end(), out.begin(), [](auto c) { return c.real(); });
  return GridFunction(F.dim(), F.depth(), std::move(out), std::move(label));
}

GridFunction bessel_lift(const GridFunction& f, double order) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return apply_radial_multiplier(
      f,
      [order](double k) {
        const double xi = two_pi * k;
        return std::pow(1.0 + xi * xi, -order / 2.0);
      },
      f.label());
}

double sup_norm(const GridFunction& f) noexcept {
  double m = 0.0;
  for (double v : f.samples()) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace lipdist
