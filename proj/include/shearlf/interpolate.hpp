#pragma once

#include "shearlf/image.hpp"

namespace shearlf {

// Keys cubic convolution kernel, a = -0.5. Interpolating: reproduces samples
// exactly at integer positions and sums to 1 over the integer lattice.
double cubic_kernel(double t);

// dst[x] = src sampled at (x - shift) with the cubic kernel; samples outside
// [0, n) count as zero. dst and src must not alias and have equal length.
void shift_row(const double* src, double* dst, int n, double shift);

// Separable cubic resize; output pixel centers map to input via the
// center-aligned convention, edges clamp. in_rows==out_rows && in_cols==out_cols
// reproduces the input exactly.
Plane resize_cubic(const Plane& in, int out_rows, int out_cols);
ColorImage resize_cubic(const ColorImage& in, int out_rows, int out_cols);

}  // namespace shearlf
