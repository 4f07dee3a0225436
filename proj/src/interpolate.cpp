#include "shearlf/interpolate.hpp"

#include <cmath>

namespace shearlf {

double cubic_kernel(double t) {
  const double a = -0.5;
  double x = std::abs(t);
  if (x < 1.0) return ((a + 2.0) * x - (a + 3.0)) * x * x + 1.0;
  if (x < 2.0) return ((a * x - 5.0 * a) * x + 8.0 * a) * x - 4.0 * a;
  return 0.0;
}

void shift_row(const double* src, double* dst, int n, double shift) {
  for (int x = 0; x < n; ++x) {
    double pos = x - shift;
    double base = std::floor(pos);
    double frac = pos - base;
    int ib = static_cast<int>(base);
    double acc = 0.0;
    for (int k = -1; k <= 2; ++k) {
      int idx = ib + k;
      if (idx < 0 || idx >= n) continue;
      acc += src[idx] * cubic_kernel(frac - k);
    }
    dst[x] = acc;
  }
}

namespace {

// 1D resample of a strided line; clamp at the edges.
void resample_line(const double* src, int n, int stride, double* dst, int out_n,
                   int out_stride) {
  double scale = static_cast<double>(n) / out_n;
  for (int o = 0; o < out_n; ++o) {
    double pos = (o + 0.5) * scale - 0.5;
    double base = std::floor(pos);
    double frac = pos - base;
    int ib = static_cast<int>(base);
    double acc = 0.0;
    for (int k = -1; k <= 2; ++k) {
      int idx = ib + k;
      if (idx < 0) idx = 0;
      if (idx >= n) idx = n - 1;
      acc += src[static_cast<size_t>(idx) * stride] * cubic_kernel(frac - k);
    }
    dst[static_cast<size_t>(o) * out_stride] = acc;
  }
}

}  // namespace

Plane resize_cubic(const Plane& in, int out_rows, int out_cols) {
  require(out_rows >= 1 && out_cols >= 1, "resize_cubic: bad output size");
  // Columns first, then rows.
  Plane mid(in.rows(), out_cols);
  for (int r = 0; r < in.rows(); ++r)
    resample_line(in.row(r), in.cols(), 1, mid.row(r), out_cols, 1);
  Plane out(out_rows, out_cols);
  for (int c = 0; c < out_cols; ++c)
    resample_line(mid.data() + c, mid.rows(), mid.cols(), out.data() + c, out_rows,
                  out.cols());
  return out;
}

ColorImage resize_cubic(const ColorImage& in, int out_rows, int out_cols) {
  ColorImage out;
  for (int c = 0; c < 3; ++c) out.ch[c] = resize_cubic(in.ch[c], out_rows, out_cols);
  return out;
}

}  // namespace shearlf
