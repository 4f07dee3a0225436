#include "shearlf/shear_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "shearlf/interpolate.hpp"

namespace shearlf {

namespace {
constexpr int kFirstLineRow = 16;
}

bool LineMask::contains_row(int r) const {
  return std::binary_search(active_rows.begin(), active_rows.end(), r);
}

PhiChoice choose_phi(const DisparityConfig& d, double budget) {
  d.validate();
  if (d.range() > budget)
    throw ConfigError("disparity range " + std::to_string(d.range()) +
                      " exceeds the shear budget " + std::to_string(budget));
  PhiChoice c;
  c.lo = d.d_min - (budget - d.range());
  c.hi = d.d_min;
  c.phi = d.d_min;
  return c;
}

int default_border_margin(int n, double phi) {
  int shear_pad = static_cast<int>(std::ceil((n - 1) * std::abs(phi)));
  return shear_pad == 0 ? 0 : round_up(shear_pad, 16);
}

ShearedEpi preshear_pad(const Plane& epi_channel, double phi, int spacing, int canvas_h) {
  const int n = epi_channel.rows();
  const int m = epi_channel.cols();
  require(spacing >= 1, "preshear_pad: spacing must be positive");
  require(canvas_h % 16 == 0, "preshear_pad: canvas height must be a multiple of 16");
  if (kFirstLineRow + (n - 1) * spacing >= canvas_h)
    throw std::invalid_argument("preshear_pad: canvas height " + std::to_string(canvas_h) +
                                " too small for " + std::to_string(n) + " lines at spacing " +
                                std::to_string(spacing));

  const int shear_pad = static_cast<int>(std::ceil((n - 1) * std::abs(phi)));
  const int w = round_up(m + shear_pad, 16);

  ShearedEpi se;
  se.geom.rows = canvas_h;
  se.geom.cols = w;
  se.geom.spacing = spacing;
  se.geom.phi = phi;
  se.geom.top = kFirstLineRow;
  se.geom.line_count = n;
  se.geom.pad_left = (phi < 0.0) ? w - m : 0;
  se.geom.pad_right = (phi < 0.0) ? 0 : w - m;
  se.geom.source_width = m;

  Plane canvas(canvas_h, w, 0.0);
  std::vector<double> padded(w, 0.0);
  for (int i = 0; i < n; ++i) {
    std::fill(padded.begin(), padded.end(), 0.0);
    for (int x = 0; x < m; ++x) padded[se.geom.pad_left + x] = epi_channel(i, x);
    shift_row(padded.data(), canvas.row(se.geom.top + i * spacing), w, i * phi);
  }
  se.channels.push_back(std::move(canvas));
  return se;
}

ShearedEpi preshear_pad(const Epi& epi, double phi, int spacing, int canvas_h) {
  ShearedEpi se = preshear_pad(epi.ch[0], phi, spacing, canvas_h);
  se.channels.push_back(preshear_pad(epi.ch[1], phi, spacing, canvas_h).channels[0]);
  se.channels.push_back(preshear_pad(epi.ch[2], phi, spacing, canvas_h).channels[0]);
  return se;
}

ShearedEpi border_crop(const ShearedEpi& se, int margin) {
  require(margin >= 0, "border_crop: negative margin");
  const int w = se.cols();
  require(2 * margin < w, "border_crop: margin too large");
  require((w - 2 * margin) % 16 == 0, "border_crop: margin must keep width a multiple of 16");
  if (margin == 0) return se;

  ShearedEpi out;
  out.geom = se.geom;
  out.geom.cols = w - 2 * margin;
  out.geom.pad_left -= margin;
  out.geom.pad_right -= margin;
  out.geom.crop_left += margin;
  out.geom.crop_right += margin;
  for (const auto& ch : se.channels) {
    Plane p(ch.rows(), w - 2 * margin);
    for (int r = 0; r < ch.rows(); ++r)
      for (int c = 0; c < p.cols(); ++c) p(r, c) = ch(r, c + margin);
    out.channels.push_back(std::move(p));
  }
  return out;
}

ShearedEpi random_crop(const ShearedEpi& se, int width, Rng& rng) {
  const int w = se.cols();
  require(width >= 1 && width <= w, "random_crop: width exceeds canvas");
  require(width % 16 == 0, "random_crop: width must be a multiple of 16");
  const int offset = (width == w) ? 0 : rng.uniform_int(0, w - width);

  ShearedEpi out;
  out.geom = se.geom;
  out.geom.cols = width;
  out.geom.pad_left -= offset;
  out.geom.pad_right -= (w - width - offset);
  out.geom.crop_left += offset;
  out.geom.crop_right += (w - width - offset);
  for (const auto& ch : se.channels) {
    Plane p(ch.rows(), width);
    for (int r = 0; r < ch.rows(); ++r)
      for (int c = 0; c < width; ++c) p(r, c) = ch(r, c + offset);
    out.channels.push_back(std::move(p));
  }
  return out;
}

LineMask make_input_mask(const ShearedEpi& se) {
  const int n = se.geom.line_count;
  LineMask mask;
  mask.rows = se.rows();
  mask.cols = se.cols();
  if (n == 3) {
    mask.active_rows = se.geom.line_rows();
    mask.spacing = se.geom.spacing;
  } else if (n >= 9 && n % 4 == 1) {
    const int half = (n - 1) / 2;
    mask.active_rows = {se.geom.top, se.geom.top + half * se.geom.spacing,
                        se.geom.top + (n - 1) * se.geom.spacing};
    mask.spacing = half * se.geom.spacing;
  } else {
    throw std::invalid_argument("make_input_mask: " + std::to_string(n) +
                                " lines have no well-defined first/middle/last split");
  }
  return mask;
}

LineMask make_eval_mask(const ShearedEpi& se) {
  LineMask mask;
  mask.rows = se.rows();
  mask.cols = se.cols();
  mask.active_rows = se.geom.line_rows();
  mask.spacing = se.geom.spacing;
  return mask;
}

Plane apply_mask(const Plane& canvas, const LineMask& mask) {
  require(canvas.rows() == mask.rows && canvas.cols() == mask.cols,
          "apply_mask: shape mismatch");
  Plane out(canvas.rows(), canvas.cols(), 0.0);
  for (int r : mask.active_rows)
    for (int c = 0; c < canvas.cols(); ++c) out(r, c) = canvas(r, c);
  return out;
}

ShearedEpi decimate(const ShearedEpi& se, const LineMask& mask) {
  require(se.rows() == mask.rows && se.cols() == mask.cols, "decimate: shape mismatch");
  ShearedEpi out;
  out.geom = se.geom;
  out.geom.top = mask.active_rows.empty() ? se.geom.top : mask.active_rows.front();
  out.geom.spacing = mask.spacing > 0 ? mask.spacing : se.geom.spacing;
  out.geom.line_count = static_cast<int>(mask.active_rows.size());
  for (const auto& ch : se.channels) out.channels.push_back(apply_mask(ch, mask));
  return out;
}

Plane postshear(const Plane& dense, const EpiGeometry& geom) {
  require(dense.rows() == geom.rows && dense.cols() == geom.cols,
          "postshear: canvas does not match geometry");
  require(geom.line_count >= 1 && geom.spacing >= 1, "postshear: bad geometry");
  require(geom.pad_left >= 0 && geom.pad_left + geom.source_width <= geom.cols,
          "postshear: source columns were cropped away");
  const int out_rows = (geom.line_count - 1) * geom.spacing + 1;
  require(geom.top + out_rows <= geom.rows, "postshear: lines exceed canvas");

  Plane out(out_rows, geom.source_width);
  std::vector<double> shifted(geom.cols);
  for (int j = 0; j < out_rows; ++j) {
    const double shift = -geom.phi * static_cast<double>(j) / geom.spacing;
    shift_row(dense.row(geom.top + j), shifted.data(), geom.cols, shift);
    for (int x = 0; x < geom.source_width; ++x) out(j, x) = shifted[geom.pad_left + x];
  }
  return out;
}

}  // namespace shearlf
