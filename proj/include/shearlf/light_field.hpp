#pragma once

#include <array>
#include <vector>

#include "shearlf/image.hpp"

namespace shearlf {

// Horizontal-parallax 3D light field: n views of l x m RGB pixels.
struct LightField {
  std::vector<ColorImage> views;

  int n() const { return static_cast<int>(views.size()); }
  int height() const { return views.empty() ? 0 : views[0].rows(); }
  int width() const { return views.empty() ? 0 : views[0].cols(); }
  void validate() const;
};

// One EPI slice: rows = views, cols = spatial positions. Row i of the EPI is
// the fixed scanline of view i.
using Epi = ColorImage;

struct DisparityConfig {
  double d_min = 0.0;
  double d_max = 0.0;
  double range() const { return d_max - d_min; }
  void validate() const { require(range() >= 0.0, "disparity: d_max < d_min"); }
};

// Dense view count for a sparse light field of n views upsampled by tau.
int dense_view_count(int n, int tau);

Epi extract_epi(const LightField& lf, int row);
LightField assemble_lf(const std::vector<Epi>& epis);

// Overlapping view triples (v0,v1,v2),(v2,v3,v4),... covering an odd-n light
// field; each triple is reconstructed independently.
std::vector<std::array<int, 3>> split_sub_sslf(int n);

// Inverse of the split: concatenates per-triple dense results, dropping the
// duplicated boundary view of every sub-result after the first.
LightField merge_sub_dslf(const std::vector<LightField>& sub_results, int tau);

}  // namespace shearlf
