#pragma once

#include <vector>

#include "shearlf/image.hpp"
#include "shearlf/light_field.hpp"
#include "shearlf/rng.hpp"

namespace shearlf {

// Placement of the EPI lines inside a processing canvas, carried through
// every geometry operation so post-shearing can undo them.
struct EpiGeometry {
  int rows = 0, cols = 0;    // canvas size
  int spacing = 0;           // rows between adjacent lines
  double phi = 0.0;          // horizontal shift applied per line step
  int top = 0;               // canvas row of the first line
  int line_count = 0;
  int pad_left = 0;          // canvas column of source column 0 (line 0)
  int pad_right = 0;
  int source_width = 0;
  int crop_left = 0, crop_right = 0, crop_top = 0;  // accumulated crops

  std::vector<int> line_rows() const {
    std::vector<int> r(line_count);
    for (int i = 0; i < line_count; ++i) r[i] = top + i * spacing;
    return r;
  }
};

// Sheared, zero-padded EPI canvas; one plane per color channel.
struct ShearedEpi {
  std::vector<Plane> channels;
  EpiGeometry geom;

  int rows() const { return channels.empty() ? 0 : channels[0].rows(); }
  int cols() const { return channels.empty() ? 0 : channels[0].cols(); }
};

// Binary whole-row mask over a canvas.
struct LineMask {
  int rows = 0, cols = 0;
  std::vector<int> active_rows;  // sorted
  int spacing = 0;               // gap between adjacent active rows

  bool contains_row(int r) const;
};

struct PhiChoice {
  double phi = 0.0;
  double lo = 0.0, hi = 0.0;  // admissible interval
};

// Admissible pre-shear shift for a disparity range within the given budget
// (tau/4 during training, tau at inference). Picks the upper end d_min.
PhiChoice choose_phi(const DisparityConfig& d, double budget);

// Default two-sided crop removing all shear-invalid columns, rounded up to
// keep the canvas width a multiple of 16.
int default_border_margin(int n, double phi);

// Shear each EPI row by row_index*phi (cubic subpixel shift), place rows at
// `spacing` apart starting at canvas row 16, and zero-pad the width to a
// multiple of 16 with the padding on the side the shear vacates.
ShearedEpi preshear_pad(const Plane& epi_channel, double phi, int spacing, int canvas_h);
ShearedEpi preshear_pad(const Epi& epi, double phi, int spacing, int canvas_h);

ShearedEpi border_crop(const ShearedEpi& se, int margin);
ShearedEpi random_crop(const ShearedEpi& se, int width, Rng& rng);

// Input mask: the first, middle and last lines during training (>= 9 lines),
// all three lines at inference. Adjacent active rows end up tau apart.
LineMask make_input_mask(const ShearedEpi& se);
// Evaluation mask: every line row.
LineMask make_eval_mask(const ShearedEpi& se);

ShearedEpi decimate(const ShearedEpi& se, const LineMask& mask);
Plane apply_mask(const Plane& canvas, const LineMask& mask);

// Extract the dense EPI from a reconstructed canvas: one output row per
// canvas row between the first and last line, each unsheared by
// -phi * (row - top) / spacing, with the padding columns removed.
Plane postshear(const Plane& dense, const EpiGeometry& geom);

}  // namespace shearlf
