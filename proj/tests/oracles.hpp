#pragma once

// Test-only synthetic data. Textures are sums of periodic cosines evaluated
// in closed form, so sheared lines and dense ground truth come from exact
// arithmetic that is independent of the interpolation and solver code paths.

#include <cmath>
#include <vector>

#include "shearlf/image.hpp"
#include "shearlf/light_field.hpp"
#include "shearlf/rng.hpp"

namespace shearlf::testing {

struct Texture {
  struct Harmonic {
    int cycles;
    double amp;
    double phase;
  };
  std::vector<Harmonic> harmonics;
  double offset = 0.5;
  double period = 1.0;

  double operator()(double x) const {
    double v = offset;
    for (const auto& h : harmonics)
      v += h.amp * std::cos(2.0 * 3.14159265358979323846 * h.cycles * x / period + h.phase);
    return v;
  }
};

// Smooth random texture with values inside [lo, hi].
inline Texture random_texture(Rng& rng, double period, int max_cycles = 12,
                              int count = 6, double lo = 0.1, double hi = 0.9) {
  Texture t;
  t.period = period;
  double total = 0.0;
  for (int i = 0; i < count; ++i) {
    int cycles = rng.uniform_int(1, max_cycles);
    double amp = rng.uniform(0.3, 1.0) / (1.0 + 0.25 * cycles);
    double phase = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    t.harmonics.push_back({cycles, amp, phase});
    total += amp;
  }
  double half = 0.5 * (hi - lo);
  for (auto& h : t.harmonics) h.amp *= half / total;
  t.offset = 0.5 * (lo + hi);
  return t;
}

// Dense canvas: rows [top, top + span] carry the texture sheared by `slope`
// pixels per row; all other rows are zero.
inline Plane render_dense_canvas(const Texture& tex, int rows, int cols, int top,
                                 int span, double slope) {
  Plane canvas(rows, cols, 0.0);
  for (int r = top; r <= top + span; ++r)
    for (int x = 0; x < cols; ++x) canvas(r, x) = tex(x - slope * (r - top));
  return canvas;
}

// Horizontal-parallax light field of `n` views whose scene shifts by
// `disparity` pixels per view; every (row, channel) gets its own texture.
inline LightField render_sslf(int n, int height, int width, double disparity,
                              uint64_t seed) {
  std::vector<std::array<Texture, 3>> textures(height);
  Rng rng(seed);
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < 3; ++c) textures[r][c] = random_texture(rng, width);

  LightField lf;
  for (int i = 0; i < n; ++i) {
    ColorImage view(height, width);
    for (int r = 0; r < height; ++r)
      for (int c = 0; c < 3; ++c)
        for (int x = 0; x < width; ++x)
          view.ch[c](r, x) = textures[r][c](x - disparity * i);
    lf.views.push_back(view);
  }
  return lf;
}

}  // namespace shearlf::testing
