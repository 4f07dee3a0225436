#pragma once

#include <complex>
#include <memory>

#include "shearlf/common.hpp"

namespace shearlf {

// Out-of-place complex 2D FFT on a fixed (rows, cols) grid, backed by FFTW.
// Plans are created unaligned so callers may pass ordinary vectors; execution
// on distinct buffers is safe from multiple threads.
template <typename T>
class Fft2D {
 public:
  Fft2D(int rows, int cols);
  ~Fft2D();
  Fft2D(const Fft2D&) = delete;
  Fft2D& operator=(const Fft2D&) = delete;

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void forward(const std::complex<T>* in, std::complex<T>* out) const;
  // Inverse transform scaled by 1/(rows*cols).
  void inverse(const std::complex<T>* in, std::complex<T>* out) const;

 private:
  struct Impl;
  int rows_, cols_;
  std::unique_ptr<Impl> impl_;
};

extern template class Fft2D<double>;
extern template class Fft2D<float>;

}  // namespace shearlf
