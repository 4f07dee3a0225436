#pragma once

#include <memory>
#include <vector>

#include "shearlf/fft.hpp"
#include "shearlf/image.hpp"

namespace shearlf {

// Channel-major stack of real shearlet coefficients (channels x rows x cols).
template <typename T>
struct CoefficientStack {
  int rows = 0, cols = 0, channels = 0;
  std::vector<T> data;

  CoefficientStack() = default;
  CoefficientStack(int rows_, int cols_, int channels_)
      : rows(rows_), cols(cols_), channels(channels_),
        data(static_cast<size_t>(rows_) * cols_ * channels_, T(0)) {}

  size_t plane_size() const { return static_cast<size_t>(rows) * cols; }
  T* channel(int c) { return data.data() + plane_size() * c; }
  const T* channel(int c) const { return data.data() + plane_size() * c; }
};

struct FilterInfo {
  enum Kind { kLowpass, kDirectional };
  Kind kind = kLowpass;
  int scale = -1;  // -1 for the lowpass
  int shear = 0;
  // Nominal EPI line slope (pixels per row) this filter responds to.
  double slope = 0.0;
};

// Number of scales for a sampling interval tau: ceil(log2 tau).
int scale_count(int tau);
// Number of filters for xi scales: 2^(xi+1) + xi - 1.
int shearlet_count(int xi);

// Parseval frame of frequency-domain filters on a fixed H x W grid.
//
// The grid is tiled by one Meyer-windowed lowpass plus, per scale j, a fan of
// 2^(j+1)+1 directional wedges whose nominal slopes cover [0,1] pixel/row.
// Scales occupy dyadic bands of the normalized frequency radius
// max(|fx|/W, |fy|/H); the finest band extends to Nyquist. After assembly the
// filters are symmetrized (so analysis of a real image is real) and divided
// pointwise by sqrt(sum of squares), making the frame exactly Parseval.
class ShearletSystem {
 public:
  ShearletSystem(int rows, int cols, int scales, int gamma);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int scales() const { return scales_; }
  int gamma() const { return gamma_; }
  int count() const { return static_cast<int>(filters_.size()); }

  const Plane& filter(int t) const { return filters_[t]; }
  const FilterInfo& info(int t) const { return info_[t]; }

  // image -> coefficients: channel t = Re IDFT( DFT(image) . conj(filter_t) ).
  CoefficientStack<double> analysis(const Plane& image) const;
  CoefficientStack<float> analysis(const PlaneF& image) const;

  // coefficients -> image: Re IDFT( sum_t DFT(coeff_t) . filter_t ).
  // Adjoint of analysis; inverse of it as well since the frame is Parseval.
  Plane synthesis(const CoefficientStack<double>& coeffs) const;
  PlaneF synthesis(const CoefficientStack<float>& coeffs) const;

 private:
  template <typename T>
  CoefficientStack<T> analysis_impl(const PlaneT<T>& image) const;
  template <typename T>
  PlaneT<T> synthesis_impl(const CoefficientStack<T>& coeffs) const;
  template <typename T>
  const T* filter_ptr(int t) const;
  template <typename T>
  const Fft2D<T>& fft() const;

  int rows_, cols_, scales_, gamma_;
  std::vector<Plane> filters_;
  std::vector<std::vector<float>> filters_f_;
  std::vector<FilterInfo> info_;
  std::unique_ptr<Fft2D<double>> fft64_;
  std::unique_ptr<Fft2D<float>> fft32_;
};

}  // namespace shearlf
