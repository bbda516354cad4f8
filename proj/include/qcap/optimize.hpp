#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qcap/channel.hpp"
#include "qcap/info.hpp"
#include "qcap/matrix.hpp"

namespace qcap {

enum class InputMode { pure, mixed };

// Bloch-ball input parameterization; r = 1 is the sphere of pure states.
struct BlochPoint {
  double theta;  // [0, pi]
  double phi;    // [0, 2*pi)
  double r;      // [0, 1]
};

struct OptimizerConfig {
  std::size_t n_grid = 512;
  std::size_t n_seeds = 8;
  double objective_tol = 1e-9;
  std::size_t max_iters = 2000;
  std::uint64_t rng_seed = 0;
  InputMode input_mode = InputMode::pure;
};

struct SeedTrace {
  BlochPoint start;
  double refined_value;
};

struct OptResult {
  double best_value = 0.0;
  BlochPoint best_point{0.0, 0.0, 1.0};
  std::size_t evaluations = 0;
  bool converged = false;
  std::vector<SeedTrace> seed_trace;
};

struct RefineResult {
  BlochPoint point;
  double value;
  bool converged;
  std::size_t evaluations;
};

// rho = (I + r(sin t cos f X + sin t sin f Y + cos t Z)) / 2.
HermitianMatrix bloch_state(const BlochPoint& pt);

// Latin hypercube over (theta, phi) and, in mixed mode, r. Deterministic for
// a fixed rng_seed; each axis marginal hits every 1/n_grid stratum once.
std::vector<BlochPoint> sample_candidates(const OptimizerConfig& cfg);

// Nelder-Mead refinement from `start`; coordinates are theta, phi and, in
// mixed mode, atanh-squashed r. Out-of-range points are folded back.
RefineResult refine_local(const std::function<double(const BlochPoint&)>& objective,
                          const BlochPoint& start, const OptimizerConfig& cfg);

// Two-stage maximization: LHS sampling, then local refinement of the top
// n_seeds candidates. Ties break toward the lowest seed index.
OptResult maximize_metric(const KrausChannel& ch, MetricKind metric, const OptimizerConfig& cfg);

}  // namespace qcap
