#pragma once

#include <set>

#include "shearlf/light_field.hpp"

namespace shearlf {

// Peak signal-to-noise ratio with peak 1.0; +infinity for identical inputs.
double psnr(const Plane& a, const Plane& b);
double psnr(const ColorImage& a, const ColorImage& b);

struct EvalResult {
  double min_psnr = 0.0;
  double avg_psnr = 0.0;
};

// Per-view PSNR over the synthesized views only (input views excluded).
EvalResult evaluate(const LightField& dslf, const LightField& gt,
                    const std::set<int>& input_view_indices);

}  // namespace shearlf
