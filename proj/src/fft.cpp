#include "shearlf/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <vector>

namespace shearlf {

namespace {
// FFTW plan creation/destruction is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

template <typename T>
struct FftwApi;

template <>
struct FftwApi<double> {
  using complex = fftw_complex;
  using plan = fftw_plan;
  static plan plan_dft(int r, int c, complex* in, complex* out, int sign) {
    return fftw_plan_dft_2d(r, c, in, out, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  static void execute(plan p, complex* in, complex* out) { fftw_execute_dft(p, in, out); }
  static void destroy(plan p) { fftw_destroy_plan(p); }
};

template <>
struct FftwApi<float> {
  using complex = fftwf_complex;
  using plan = fftwf_plan;
  static plan plan_dft(int r, int c, complex* in, complex* out, int sign) {
    return fftwf_plan_dft_2d(r, c, in, out, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  static void execute(plan p, complex* in, complex* out) { fftwf_execute_dft(p, in, out); }
  static void destroy(plan p) { fftwf_destroy_plan(p); }
};

template <typename T>
struct Fft2D<T>::Impl {
  typename FftwApi<T>::plan fwd = nullptr;
  typename FftwApi<T>::plan bwd = nullptr;
};

template <typename T>
Fft2D<T>::Fft2D(int rows, int cols) : rows_(rows), cols_(cols), impl_(new Impl) {
  require(rows >= 1 && cols >= 1, "Fft2D: bad dimensions");
  std::vector<std::complex<T>> dummy(static_cast<size_t>(rows) * cols);
  auto* p = reinterpret_cast<typename FftwApi<T>::complex*>(dummy.data());
  std::lock_guard<std::mutex> lock(planner_mutex());
  impl_->fwd = FftwApi<T>::plan_dft(rows, cols, p, p, FFTW_FORWARD);
  impl_->bwd = FftwApi<T>::plan_dft(rows, cols, p, p, FFTW_BACKWARD);
  if (!impl_->fwd || !impl_->bwd) throw NumericError("FFTW plan creation failed");
}

template <typename T>
Fft2D<T>::~Fft2D() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (impl_->fwd) FftwApi<T>::destroy(impl_->fwd);
  if (impl_->bwd) FftwApi<T>::destroy(impl_->bwd);
}

template <typename T>
void Fft2D<T>::forward(const std::complex<T>* in, std::complex<T>* out) const {
  auto* pin = reinterpret_cast<typename FftwApi<T>::complex*>(const_cast<std::complex<T>*>(in));
  auto* pout = reinterpret_cast<typename FftwApi<T>::complex*>(out);
  FftwApi<T>::execute(impl_->fwd, pin, pout);
}

template <typename T>
void Fft2D<T>::inverse(const std::complex<T>* in, std::complex<T>* out) const {
  auto* pin = reinterpret_cast<typename FftwApi<T>::complex*>(const_cast<std::complex<T>*>(in));
  auto* pout = reinterpret_cast<typename FftwApi<T>::complex*>(out);
  FftwApi<T>::execute(impl_->bwd, pin, pout);
  const T scale = T(1) / static_cast<T>(static_cast<size_t>(rows_) * cols_);
  const size_t total = static_cast<size_t>(rows_) * cols_;
  for (size_t i = 0; i < total; ++i) out[i] *= scale;
}

template class Fft2D<double>;
template class Fft2D<float>;

}  // namespace shearlf
