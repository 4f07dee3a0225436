#pragma once

#include <functional>
#include <vector>

#include "shearlf/shear_geometry.hpp"
#include "shearlf/shearlet.hpp"

namespace shearlf {

struct SolverConfig {
  int iterations = 100;
  double alpha = 20.0;  // decay constant of the exponential schedule
  enum Schedule { kLinear, kExponential };
  Schedule schedule = kLinear;
  double lambda_min = 0.0;
  bool dore = true;

  void validate() const {
    require(iterations >= 1, "solver: iterations must be >= 1");
    require(alpha > 0.0, "solver: alpha must be positive");
    require(lambda_min >= 0.0, "solver: lambda_min must be >= 0");
  }
};

struct IterationStat {
  int iteration = 0;
  double lambda = 0.0;
  double masked_residual = 0.0;  // ||mask.(x_{k+1} - measured)||_2
};

// Zero every directional coefficient with |value| <= lambda. The lowpass
// channel passes through unchanged.
void hard_threshold(CoefficientStack<double>& coeffs, double lambda);

double threshold_schedule(int k, const SolverConfig& cfg, double lambda_max);

// Initial estimate: keep only the lowpass channel and scale by the line
// spacing to compensate for the missing rows.
Plane lowpass_init(const ShearletSystem& sys, const Plane& measured, int spacing);

// Double overrelaxation: extrapolate along the last two iterate differences
// with least-squares step sizes on the masked residual; fall back to z when
// the extrapolation does not reduce the residual.
Plane dore_step(const Plane& z, const Plane& x_prev, const Plane& x_prev2,
                const LineMask& mask, const Plane& measured);

// Iterative sparse regularization: alternate measurement re-imposition,
// analysis, hard thresholding with a decreasing lambda, synthesis, and the
// DORE update. The output equals `measured` on mask rows exactly.
Plane st_reconstruct(const ShearletSystem& sys, const Plane& measured, const LineMask& mask,
                     const SolverConfig& cfg, std::vector<IterationStat>* stats = nullptr,
                     const std::function<void(int, const Plane&)>& observer = {});

}  // namespace shearlf
