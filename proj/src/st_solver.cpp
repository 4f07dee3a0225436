#include "shearlf/st_solver.hpp"

#include <cmath>

namespace shearlf {

void hard_threshold(CoefficientStack<double>& coeffs, double lambda) {
  require(lambda >= 0.0, "hard_threshold: negative lambda");
  for (int t = 1; t < coeffs.channels; ++t) {
    double* ch = coeffs.channel(t);
    for (size_t i = 0; i < coeffs.plane_size(); ++i)
      if (std::abs(ch[i]) <= lambda) ch[i] = 0.0;
  }
}

double threshold_schedule(int k, const SolverConfig& cfg, double lambda_max) {
  cfg.validate();
  require(k >= 0 && k < cfg.iterations, "threshold_schedule: k out of range");
  if (cfg.iterations == 1) return cfg.lambda_min;
  if (cfg.schedule == SolverConfig::kLinear) {
    double frac = static_cast<double>(k) / (cfg.iterations - 1);
    return lambda_max * (1.0 - frac) + cfg.lambda_min * frac;
  }
  double v = lambda_max * std::exp(-cfg.alpha * k / cfg.iterations);
  return std::max(v, cfg.lambda_min);
}

Plane lowpass_init(const ShearletSystem& sys, const Plane& measured, int spacing) {
  require(spacing >= 1, "lowpass_init: spacing must be positive");
  CoefficientStack<double> c = sys.analysis(measured);
  for (int t = 1; t < c.channels; ++t) {
    double* ch = c.channel(t);
    std::fill(ch, ch + c.plane_size(), 0.0);
  }
  Plane out = sys.synthesis(c);
  for (size_t i = 0; i < out.size(); ++i) out.data()[i] *= spacing;
  return out;
}

namespace {

// Residual restricted to mask rows, flattened.
std::vector<double> masked_residual_vec(const Plane& w, const LineMask& mask,
                                        const Plane& measured) {
  std::vector<double> r;
  r.reserve(mask.active_rows.size() * w.cols());
  for (int row : mask.active_rows)
    for (int c = 0; c < w.cols(); ++c) r.push_back(w(row, c) - measured(row, c));
  return r;
}

double sq(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

// Least-squares overrelaxation coefficient for u = z + a*(z - x): minimizes
// ||r(z) + a*(r(z) - r(x))||.
double ls_coeff(const std::vector<double>& rz, const std::vector<double>& rx) {
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < rz.size(); ++i) {
    double d = rz[i] - rx[i];
    num += rz[i] * d;
    den += d * d;
  }
  if (den < 1e-20) return 0.0;
  return -num / den;
}

Plane extrapolate(const Plane& a, const Plane& b, double coef) {
  Plane out(a.rows(), a.cols());
  for (size_t i = 0; i < a.size(); ++i)
    out.data()[i] = a.data()[i] + coef * (a.data()[i] - b.data()[i]);
  return out;
}

}  // namespace

Plane dore_step(const Plane& z, const Plane& x_prev, const Plane& x_prev2,
                const LineMask& mask, const Plane& measured) {
  require(z.same_shape(x_prev) && z.same_shape(x_prev2) && z.same_shape(measured),
          "dore_step: shape mismatch");

  auto rz = masked_residual_vec(z, mask, measured);
  auto rp = masked_residual_vec(x_prev, mask, measured);
  double a = ls_coeff(rz, rp);
  Plane u = extrapolate(z, x_prev, a);

  auto ru = masked_residual_vec(u, mask, measured);
  auto rp2 = masked_residual_vec(x_prev2, mask, measured);
  double b = ls_coeff(ru, rp2);
  Plane v = extrapolate(u, x_prev2, b);

  auto rv = masked_residual_vec(v, mask, measured);
  return (sq(rv) <= sq(rz)) ? v : z;
}

Plane st_reconstruct(const ShearletSystem& sys, const Plane& measured, const LineMask& mask,
                     const SolverConfig& cfg, std::vector<IterationStat>* stats,
                     const std::function<void(int, const Plane&)>& observer) {
  cfg.validate();
  require(measured.rows() == sys.rows() && measured.cols() == sys.cols(),
          "st_reconstruct: canvas does not match the shearlet system");
  require(measured.rows() == mask.rows && measured.cols() == mask.cols,
          "st_reconstruct: mask does not match the canvas");
  require(!mask.active_rows.empty(), "st_reconstruct: mask has no active rows");

  Plane x = lowpass_init(sys, measured, mask.spacing > 0 ? mask.spacing : 1);

  // Schedule start: the largest directional coefficient of the first
  // measurement-consistent iterate, so iteration 0 suppresses everything and
  // structure is admitted gradually as lambda decreases.
  double lambda_max = 0.0;
  {
    Plane y0 = x;
    for (int row : mask.active_rows)
      for (int c = 0; c < y0.cols(); ++c) y0(row, c) = measured(row, c);
    CoefficientStack<double> c0 = sys.analysis(y0);
    for (int t = 1; t < c0.channels; ++t) {
      const double* ch = c0.channel(t);
      for (size_t i = 0; i < c0.plane_size(); ++i)
        lambda_max = std::max(lambda_max, std::abs(ch[i]));
    }
  }

  Plane x_prev = x;  // x_{k-1}; starts equal to x_0
  Plane y(measured.rows(), measured.cols());
  for (int k = 0; k < cfg.iterations; ++k) {
    const double lambda = threshold_schedule(k, cfg, lambda_max);

    // Measurement-consistent iterate.
    y = x;
    for (int row : mask.active_rows)
      for (int c = 0; c < y.cols(); ++c) y(row, c) = measured(row, c);

    CoefficientStack<double> coeffs = sys.analysis(y);
    hard_threshold(coeffs, lambda);
    Plane z = sys.synthesis(coeffs);

    Plane x_next = cfg.dore ? dore_step(z, x, x_prev, mask, measured) : std::move(z);
    x_prev = std::move(x);
    x = std::move(x_next);

    if (stats) {
      auto r = masked_residual_vec(x, mask, measured);
      stats->push_back({k, lambda, std::sqrt(sq(r))});
    }
    if (observer) observer(k, x);
  }

  for (int row : mask.active_rows)
    for (int c = 0; c < x.cols(); ++c) x(row, c) = measured(row, c);
  return x;
}

}  // namespace shearlf
