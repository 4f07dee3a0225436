#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "shearlf/common.hpp"

namespace shearlf {

// Dense row-major 2D array of one color channel.
template <typename T>
class PlaneT {
 public:
  PlaneT() = default;
  PlaneT(int rows, int cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
    require(rows >= 1 && cols >= 1, "plane dimensions must be positive");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t size() const { return data_.size(); }

  T& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  T* row(int r) { return data_.data() + static_cast<size_t>(r) * cols_; }
  const T* row(int r) const { return data_.data() + static_cast<size_t>(r) * cols_; }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  bool same_shape(const PlaneT& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  void fill(T v) { std::fill(data_.begin(), data_.end(), v); }

  template <typename U>
  PlaneT<U> cast() const {
    PlaneT<U> out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data()[i] = static_cast<U>(data_[i]);
    return out;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using Plane = PlaneT<double>;
using PlaneF = PlaneT<float>;

// Planar RGB image, values nominally in [0,1].
struct ColorImage {
  std::array<Plane, 3> ch;

  ColorImage() = default;
  ColorImage(int rows, int cols, double fill = 0.0)
      : ch{Plane(rows, cols, fill), Plane(rows, cols, fill), Plane(rows, cols, fill)} {}

  int rows() const { return ch[0].rows(); }
  int cols() const { return ch[0].cols(); }
  bool same_shape(const ColorImage& o) const { return ch[0].same_shape(o.ch[0]); }
};

inline double max_abs_diff(const Plane& a, const Plane& b) {
  require(a.same_shape(b), "max_abs_diff: shape mismatch");
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    double d = a.data()[i] - b.data()[i];
    if (d < 0) d = -d;
    if (d > m) m = d;
  }
  return m;
}

inline double max_abs_diff(const ColorImage& a, const ColorImage& b) {
  double m = 0.0;
  for (int c = 0; c < 3; ++c) m = std::max(m, max_abs_diff(a.ch[c], b.ch[c]));
  return m;
}

}  // namespace shearlf
