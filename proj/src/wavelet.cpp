#include "lipdist/wavelet.hpp"

#include <algorithm>
#include <cmath>

#include "lipdist/error.hpp"

namespace lipdist {

namespace {

// One periodized analysis step along a strided line of even length len:
// approx[k] = sum_t low[t] x[2k + t], detail[k] = sum_t high[t] x[2k + t].
void analysis_step(const FilterBank& bank, const double* x, std::size_t len, std::size_t stride,
                   double* approx, double* detail, std::size_t out_stride) {
  const std::size_t half = len / 2;
  const std::size_t taps = bank.length();
  for (std::size_t k = 0; k < half; ++k) {
    double a = 0.0, d = 0.0;
    for (std::size_t t = 0; t < taps; ++t) {
      const double v = x[((2 * k + t) % len) * stride];
      a += bank.low[t] * v;
      d += bank.high[t] * v;
    }
    approx[k * out_stride] = a;
    detail[k * out_stride] = d;
  }
}

// Adjoint of analysis_step; x (length len) is overwritten.
void synthesis_step(const FilterBank& bank, const double* approx, const double* detail,
                    std::size_t in_stride, std::size_t len, double* x, std::size_t stride) {
  const std::size_t half = len / 2;
  const std::size_t taps = bank.length();
  for (std::size_t i = 0; i < len; ++i) x[i * stride] = 0.0;
  for (std::size_t k = 0; k < half; ++k) {
    const double a = approx[k * in_stride], d = detail[k * in_stride];
    for (std::size_t t = 0; t < taps; ++t)
      x[((2 * k + t) % len) * stride] += bank.low[t] * a + bank.high[t] * d;
  }
}

void check_resolution(int depth, const FilterBank& bank) {
  if ((std::size_t{1} << depth) < bank.length())
    throw ValidationError("grid too coarse for a filter of length " + std::to_string(bank.length()));
}

double level_weight(int dim, int level, double s) {
  return std::exp2(static_cast<double>(level) * (dim / 2.0 + s));
}

}  // namespace

WaveletCoefficients::WaveletCoefficients(int dim, int depth) : dim_(dim), depth_(depth) {
  if (dim != 1 && dim != 2) throw ValidationError("dimension must be 1 or 2");
  if (depth < 1) throw ValidationError("depth must be >= 1");
  for (int j = 0; j < depth; ++j)
    detail_.emplace_back(static_cast<std::size_t>(orientations()) * cubes_at_level(dim, j), 0.0);
}

std::size_t WaveletCoefficients::total_count() const noexcept {
  std::size_t total = 1;
  for (const auto& level : detail_) total += level.size();
  return total;
}

double WaveletCoefficients::energy() const noexcept {
  double e = scaling_ * scaling_;
  for (const auto& level : detail_)
    for (double c : level) e += c * c;
  return e;
}

WaveletCoefficients WaveletCoefficients::operator-(const WaveletCoefficients& other) const {
  if (other.dim_ != dim_ || other.depth_ != depth_) throw ValidationError("coefficient shape mismatch");
  WaveletCoefficients out = *this;
  out.scaling_ -= other.scaling_;
  for (std::size_t j = 0; j < detail_.size(); ++j)
    for (std::size_t i = 0; i < detail_[j].size(); ++i) out.detail_[j][i] -= other.detail_[j][i];
  return out;
}

WaveletCoefficients analyze(const GridFunction& f, const FilterBank& bank) {
  check_resolution(f.depth(), bank);
  const int n = f.dim();
  WaveletCoefficients out(n, f.depth());
  const double norm = std::exp2(-n * f.depth() / 2.0);
  std::vector<double> approx(f.samples().begin(), f.samples().end());
  for (double& v : approx) v *= norm;

  if (n == 1) {
    std::vector<double> next;
    for (int j = f.depth() - 1; j >= 0; --j) {
      const std::size_t len = std::size_t{2} << j;
      next.assign(len / 2, 0.0);
      analysis_step(bank, approx.data(), len, 1, next.data(), out.level(j).data(), 1);
      approx.swap(next);
    }
    out.set_scaling(approx[0]);
    return out;
  }

  std::vector<double> lo, hi, next;
  for (int j = f.depth() - 1; j >= 0; --j) {
    const std::size_t len = std::size_t{2} << j, half = len / 2;
    // Along x0: columns of the len x len block.
    lo.assign(half * len, 0.0);
    hi.assign(half * len, 0.0);
    for (std::size_t b = 0; b < len; ++b)
      analysis_step(bank, approx.data() + b, len, len, lo.data() + b, hi.data() + b, len);
    // Along x1: rows of lo and hi.
    next.assign(half * half, 0.0);
    auto level = out.level(j);
    double* lh = level.data();
    double* hl = lh + half * half;
    double* hh = hl + half * half;
    for (std::size_t a = 0; a < half; ++a) {
      analysis_step(bank, lo.data() + a * len, len, 1, next.data() + a * half, lh + a * half, 1);
      analysis_step(bank, hi.data() + a * len, len, 1, hl + a * half, hh + a * half, 1);
    }
    approx.swap(next);
  }
  out.set_scaling(approx[0]);
  return out;
}

GridFunction reconstruct(const WaveletCoefficients& coeffs, const FilterBank& bank, std::string label) {
  check_resolution(coeffs.depth(), bank);
  const int n = coeffs.dim();
  std::vector<double> approx{coeffs.scaling()}, next;

  if (n == 1) {
    for (int j = 0; j < coeffs.depth(); ++j) {
      const std::size_t len = std::size_t{2} << j;
      next.assign(len, 0.0);
      synthesis_step(bank, approx.data(), coeffs.level(j).data(), 1, len, next.data(), 1);
      approx.swap(next);
    }
  } else {
    std::vector<double> lo, hi;
    for (int j = 0; j < coeffs.depth(); ++j) {
      const std::size_t len = std::size_t{2} << j, half = len / 2;
      const auto level = coeffs.level(j);
      const double* lh = level.data();
      const double* hl = lh + half * half;
      const double* hh = hl + half * half;
      lo.assign(half * len, 0.0);
      hi.assign(half * len, 0.0);
      for (std::size_t a = 0; a < half; ++a) {
        synthesis_step(bank, approx.data() + a * half, lh + a * half, 1, len, lo.data() + a * len, 1);
        synthesis_step(bank, hl + a * half, hh + a * half, 1, len, hi.data() + a * len, 1);
      }
      next.assign(len * len, 0.0);
      for (std::size_t b = 0; b < len; ++b)
        synthesis_step(bank, lo.data() + b, hi.data() + b, len, len, next.data() + b, len);
      approx.swap(next);
    }
  }

  const double norm = std::exp2(n * coeffs.depth() / 2.0);
  for (double& v : approx) v *= norm;
  return GridFunction(n, coeffs.depth(), std::move(approx), std::move(label));
}

double wavelet_sup_term(const WaveletCoefficients& coeffs, double s) {
  double best = 0.0;
  for (int j = 0; j < coeffs.depth(); ++j) {
    const double weight = level_weight(coeffs.dim(), j, s);
    for (double c : coeffs.level(j)) best = std::max(best, std::abs(c) * weight);
  }
  return best;
}

double lip_wavelet_norm(const WaveletCoefficients& coeffs, double s) {
  if (!(s > 0.0 && s <= 1.0)) throw ValidationError("exponent s must lie in (0, 1]");
  return std::abs(coeffs.scaling()) + wavelet_sup_term(coeffs, s);
}

std::vector<std::vector<double>> jbmo_box_sums(const WaveletCoefficients& coeffs, double s) {
  const int n = coeffs.dim();
  const int depth = coeffs.depth();
  const int orient = coeffs.orientations();
  // Unnormalized sums first, bottom-up over the tree.
  std::vector<std::vector<double>> sums(static_cast<std::size_t>(depth));
  for (int j = depth - 1; j >= 0; --j) {
    const std::size_t cells = cubes_at_level(n, j);
    auto& sj = sums[static_cast<std::size_t>(j)];
    sj.assign(cells, 0.0);
    const double w = std::exp2(2.0 * s * j);
    for (int l = 1; l <= orient; ++l)
      for (std::size_t i = 0; i < cells; ++i) {
        const double c = coeffs.at(l, j, i);
        sj[i] += w * c * c;
      }
    if (j + 1 < depth) {
      const auto& child = sums[static_cast<std::size_t>(j) + 1];
      const std::size_t child_side = std::size_t{2} << j;
      for (std::size_t i = 0; i < child.size(); ++i) {
        std::size_t p;
        if (n == 1) {
          p = i >> 1;
        } else {
          const std::size_t r = i / child_side, c = i % child_side;
          p = ((r >> 1) << j) + (c >> 1);
        }
        sj[p] += child[i];
      }
    }
  }
  // Normalize by |Q| only after all children have been accumulated.
  for (int j = 0; j < depth; ++j) {
    const double inv_volume = std::exp2(static_cast<double>(n * j));
    for (double& v : sums[static_cast<std::size_t>(j)]) v *= inv_volume;
  }
  return sums;
}

double jbmo_wavelet_norm(const WaveletCoefficients& coeffs, double s) {
  if (!(s > 0.0 && s <= 1.0)) throw ValidationError("exponent s must lie in (0, 1]");
  double best = 0.0;
  for (const auto& level : jbmo_box_sums(coeffs, s))
    for (double v : level) best = std::max(best, v);
  return std::abs(coeffs.scaling()) + std::sqrt(best);
}

CellField wavelet_field(const WaveletCoefficients& coeffs, double s, int max_level) {
  if (!(s > 0.0 && s <= 1.0)) throw ValidationError("exponent s must lie in (0, 1]");
  if (max_level < 0 || max_level >= coeffs.depth())
    throw ValidationError("max level must lie in [0, depth - 1]");
  const int n = coeffs.dim();
  CellField field(n, max_level, s);
  for (int j = 0; j <= max_level; ++j) {
    const double weight = level_weight(n, j, s);
    const std::size_t cells = cubes_at_level(n, j);
    for (std::size_t i = 0; i < cells; ++i) {
      double c = 0.0;
      for (int l = 1; l <= coeffs.orientations(); ++l) c = std::max(c, std::abs(coeffs.at(l, j, i)));
      field.at(j, i) = c * weight;
    }
  }
  return field;
}

HalfSpaceSet build_T(const WaveletCoefficients& coeffs, double s, double epsilon, int max_level) {
  return wavelet_field(coeffs, s, max_level).threshold(epsilon);
}

WaveletCoefficients truncate_projection(const WaveletCoefficients& coeffs, double s, double epsilon) {
  const HalfSpaceSet kept = build_T(coeffs, s, epsilon, coeffs.depth() - 1);
  WaveletCoefficients g = coeffs;
  for (int j = 0; j < coeffs.depth(); ++j) {
    const std::size_t cells = cubes_at_level(coeffs.dim(), j);
    for (std::size_t i = 0; i < cells; ++i) {
      if (kept.contains(j, i)) continue;
      for (int l = 1; l <= coeffs.orientations(); ++l) g.at(l, j, i) = 0.0;
    }
  }
  return g;
}

nlohmann::json to_json(const WaveletCoefficients& coeffs) {
  nlohmann::json c = nlohmann::json::array();
  for (int j = 0; j < coeffs.depth(); ++j) {
    const std::size_t cells = cubes_at_level(coeffs.dim(), j);
    for (int l = 1; l <= coeffs.orientations(); ++l)
      for (std::size_t i = 0; i < cells; ++i) {
        const double v = coeffs.at(l, j, i);
        if (std::abs(v) < 1e-14) continue;
        const DyadicCube q = DyadicCube::from_linear(coeffs.dim(), j, i);
        nlohmann::json k = coeffs.dim() == 1 ? nlohmann::json(q.index[0])
                                             : nlohmann::json::array({q.index[0], q.index[1]});
        c.push_back({{"l", l}, {"j", j}, {"k", std::move(k)}, {"value", v}});
      }
  }
  nlohmann::json d = nlohmann::json::array();
  if (std::abs(coeffs.scaling()) >= 1e-14) d.push_back(coeffs.scaling());
  return {{"n", coeffs.dim()}, {"J_grid", coeffs.depth()}, {"d", std::move(d)}, {"c", std::move(c)}};
}

}  // namespace lipdist
