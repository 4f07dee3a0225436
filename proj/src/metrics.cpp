#include "shearlf/metrics.hpp"

#include <cmath>
#include <limits>

namespace shearlf {

namespace {

double mse_accum(const Plane& a, const Plane& b) {
  double acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    double d = a.data()[i] - b.data()[i];
    acc += d * d;
  }
  return acc;
}

}  // namespace

double psnr(const Plane& a, const Plane& b) {
  require(a.same_shape(b), "psnr: shape mismatch");
  double mse = mse_accum(a, b) / static_cast<double>(a.size());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return -10.0 * std::log10(mse);
}

double psnr(const ColorImage& a, const ColorImage& b) {
  require(a.same_shape(b), "psnr: shape mismatch");
  double acc = 0.0;
  for (int c = 0; c < 3; ++c) acc += mse_accum(a.ch[c], b.ch[c]);
  double mse = acc / (3.0 * a.ch[0].size());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return -10.0 * std::log10(mse);
}

EvalResult evaluate(const LightField& dslf, const LightField& gt,
                    const std::set<int>& input_view_indices) {
  dslf.validate();
  gt.validate();
  require(dslf.n() == gt.n(), "evaluate: view count mismatch");
  require(dslf.views[0].same_shape(gt.views[0]), "evaluate: view size mismatch");

  EvalResult res;
  res.min_psnr = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  int count = 0;
  for (int i = 0; i < gt.n(); ++i) {
    if (input_view_indices.count(i)) continue;
    double p = psnr(dslf.views[i], gt.views[i]);
    res.min_psnr = std::min(res.min_psnr, p);
    sum += p;
    ++count;
  }
  require(count > 0, "evaluate: all views are input views");
  res.avg_psnr = sum / count;
  return res;
}

}  // namespace shearlf
