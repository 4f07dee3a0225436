#include "shearlf/shearlet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace shearlf {

int scale_count(int tau) {
  require(tau >= 2, "scale_count: tau must be >= 2");
  int xi = 0;
  while ((1 << xi) < tau) ++xi;
  return xi;
}

int shearlet_count(int xi) {
  require(xi >= 1, "shearlet_count: xi must be >= 1");
  return (1 << (xi + 1)) + xi - 1;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

// Meyer auxiliary polynomial: smooth 0->1 on [0,1], nu(x) + nu(1-x) = 1.
double meyer_nu(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return x * x * x * x * (35.0 - 84.0 * x + 70.0 * x * x - 20.0 * x * x * x);
}

// Amplitude windows; step_down^2 + step_up^2 = 1 across the transition.
double step_down(double r, double a, double b) {
  if (r <= a) return 1.0;
  if (r >= b) return 0.0;
  return std::cos(0.5 * kPi * meyer_nu((r - a) / (b - a)));
}

double step_up(double r, double a, double b) {
  if (r <= a) return 0.0;
  if (r >= b) return 1.0;
  return std::sin(0.5 * kPi * meyer_nu((r - a) / (b - a)));
}

// Directional bump centered on slope s with half-width delta.
double wedge(double t, double s, double delta) {
  double u = std::abs(t - s) / delta;
  if (u >= 1.0) return 0.0;
  return std::cos(0.5 * kPi * meyer_nu(u));
}

double signed_freq(int idx, int n) {
  return (idx <= n / 2) ? static_cast<double>(idx) : static_cast<double>(idx - n);
}

}  // namespace

ShearletSystem::ShearletSystem(int rows, int cols, int scales, int gamma)
    : rows_(rows), cols_(cols), scales_(scales), gamma_(gamma) {
  require(scales >= 1, "shearlet: need at least one scale");
  require(gamma >= 3 && gamma % 2 == 1, "shearlet: gamma must be odd and >= 3");
  require(rows >= 64 && cols >= 64, "shearlet: canvas must be at least 64x64");
  const int min_dim = 1 << (scales + 2);
  if (rows < min_dim || cols < min_dim)
    throw std::invalid_argument("shearlet: canvas " + std::to_string(rows) + "x" +
                                std::to_string(cols) + " too small for " +
                                std::to_string(scales) + " scales (need >= " +
                                std::to_string(min_dim) + ")");

  const int eta = shearlet_count(scales);
  filters_.assign(eta, Plane(rows, cols, 0.0));
  info_.assign(eta, FilterInfo{});
  info_[0] = {FilterInfo::kLowpass, -1, 0, 0.0};
  {
    int t = 1;
    for (int j = 0; j < scales; ++j) {
      int half = 1 << j;
      for (int k = -half; k <= half; ++k, ++t)
        info_[t] = {FilterInfo::kDirectional, j, k,
                    static_cast<double>(k + half) / (2.0 * half)};
    }
  }

  // Radial transition intervals in normalized frequency (Nyquist = 1/2):
  // nominally [2^(j-xi-1), 2^(j-xi)]; gamma bounds the transition bandwidth
  // from below so spatial support stays within about gamma pixels.
  std::vector<double> lo(scales), hi(scales);
  for (int j = 0; j < scales; ++j) {
    double a = std::ldexp(1.0, j - scales - 1);
    double center = 1.5 * a;
    double halfw = std::max(0.5 * a, 1.0 / gamma);
    lo[j] = std::max(center - halfw, 0.0);
    hi[j] = center + halfw;
  }

  for (int v = 0; v < rows; ++v) {
    const double ny = signed_freq(v, rows) / rows;
    for (int u = 0; u < cols; ++u) {
      const double nx = signed_freq(u, cols) / cols;
      const double r = std::max(std::abs(nx), std::abs(ny));
      // Slope coordinate: a line x = s*y + c concentrates at ny = -s*nx.
      double t_raw = (nx == 0.0) ? 0.0 : -ny / nx;
      double t = std::clamp(t_raw, 0.0, 1.0);

      filters_[0](v, u) = step_down(r, lo[0], hi[0]);
      int idx = 1;
      for (int j = 0; j < scales; ++j) {
        double band = (j + 1 < scales) ? step_up(r, lo[j], hi[j]) * step_down(r, lo[j + 1], hi[j + 1])
                                       : step_up(r, lo[j], hi[j]);
        int half = 1 << j;
        double delta = 1.0 / (2.0 * half);
        for (int k = -half; k <= half; ++k, ++idx) {
          if (band == 0.0) continue;
          double s = static_cast<double>(k + half) * delta;
          filters_[idx](v, u) = band * wedge(t, s, delta);
        }
      }
    }
  }

  // Symmetrize under frequency negation so every filter is real-even; the
  // raw windows only break this on the Nyquist row/column.
  for (auto& f : filters_) {
    Plane sym(rows, cols);
    for (int v = 0; v < rows; ++v)
      for (int u = 0; u < cols; ++u)
        sym(v, u) = 0.5 * (f(v, u) + f((rows - v) % rows, (cols - u) % cols));
    f = std::move(sym);
  }

  // Pointwise renormalization makes the partition of unity exact.
  for (int v = 0; v < rows; ++v) {
    for (int u = 0; u < cols; ++u) {
      double acc = 0.0;
      for (const auto& f : filters_) acc += f(v, u) * f(v, u);
      double norm = std::sqrt(acc);
      if (!(norm > 0.0)) throw NumericError("shearlet: uncovered frequency sample");
      for (auto& f : filters_) f(v, u) /= norm;
    }
  }

  filters_f_.resize(eta);
  for (int t = 0; t < eta; ++t) {
    filters_f_[t].resize(static_cast<size_t>(rows) * cols);
    for (size_t i = 0; i < filters_f_[t].size(); ++i)
      filters_f_[t][i] = static_cast<float>(filters_[t].data()[i]);
  }

  fft64_ = std::make_unique<Fft2D<double>>(rows, cols);
  fft32_ = std::make_unique<Fft2D<float>>(rows, cols);
}

template <>
const double* ShearletSystem::filter_ptr<double>(int t) const {
  return filters_[t].data();
}
template <>
const float* ShearletSystem::filter_ptr<float>(int t) const {
  return filters_f_[t].data();
}
template <>
const Fft2D<double>& ShearletSystem::fft<double>() const {
  return *fft64_;
}
template <>
const Fft2D<float>& ShearletSystem::fft<float>() const {
  return *fft32_;
}

template <typename T>
CoefficientStack<T> ShearletSystem::analysis_impl(const PlaneT<T>& image) const {
  require(image.rows() == rows_ && image.cols() == cols_, "analysis: shape mismatch");
  const size_t total = static_cast<size_t>(rows_) * cols_;
  const auto& plan = fft<T>();

  std::vector<std::complex<T>> spec(total), tmp(total), inv(total);
  for (size_t i = 0; i < total; ++i) tmp[i] = std::complex<T>(image.data()[i], T(0));
  plan.forward(tmp.data(), spec.data());

  CoefficientStack<T> out(rows_, cols_, count());
  for (int t = 0; t < count(); ++t) {
    const T* f = filter_ptr<T>(t);
    for (size_t i = 0; i < total; ++i) tmp[i] = spec[i] * f[i];  // filters are real
    plan.inverse(tmp.data(), inv.data());
    T* dst = out.channel(t);
    for (size_t i = 0; i < total; ++i) dst[i] = inv[i].real();
  }
  return out;
}

template <typename T>
PlaneT<T> ShearletSystem::synthesis_impl(const CoefficientStack<T>& coeffs) const {
  require(coeffs.rows == rows_ && coeffs.cols == cols_ && coeffs.channels == count(),
          "synthesis: shape mismatch");
  const size_t total = static_cast<size_t>(rows_) * cols_;
  const auto& plan = fft<T>();

  std::vector<std::complex<T>> acc(total, std::complex<T>(0, 0));
  std::vector<std::complex<T>> tmp(total), spec(total);
  for (int t = 0; t < count(); ++t) {
    const T* src = coeffs.channel(t);
    for (size_t i = 0; i < total; ++i) tmp[i] = std::complex<T>(src[i], T(0));
    plan.forward(tmp.data(), spec.data());
    const T* f = filter_ptr<T>(t);
    for (size_t i = 0; i < total; ++i) acc[i] += spec[i] * f[i];
  }
  plan.inverse(acc.data(), tmp.data());

  PlaneT<T> out(rows_, cols_);
  for (size_t i = 0; i < total; ++i) out.data()[i] = tmp[i].real();
  return out;
}

CoefficientStack<double> ShearletSystem::analysis(const Plane& image) const {
  return analysis_impl(image);
}
CoefficientStack<float> ShearletSystem::analysis(const PlaneF& image) const {
  return analysis_impl(image);
}
Plane ShearletSystem::synthesis(const CoefficientStack<double>& coeffs) const {
  return synthesis_impl(coeffs);
}
PlaneF ShearletSystem::synthesis(const CoefficientStack<float>& coeffs) const {
  return synthesis_impl(coeffs);
}

}  // namespace shearlf
