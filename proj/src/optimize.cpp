#include "qcap/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace qcap {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Uniform double in [0,1) from the raw 64-bit stream; the distribution
// adapters in <random> are not pinned by the standard, this mapping is.
double next_unit(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

std::size_t next_below(std::mt19937_64& rng, std::size_t n) {
  return std::size_t(rng() % n);
}

std::vector<std::size_t> shuffled_strata(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = n; i-- > 1;) std::swap(idx[i], idx[next_below(rng, i + 1)]);
  return idx;
}

double fold_theta(double t) {
  t = std::fmod(t, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  return t <= kPi ? t : 2.0 * kPi - t;
}

double wrap_phi(double f) {
  f = std::fmod(f, 2.0 * kPi);
  if (f < 0.0) f += 2.0 * kPi;
  return f;
}

constexpr double kMaxSquash = 18.0;  // |tanh(18)| is 1 to double precision

double squash_r(double s) { return std::tanh(std::clamp(s, -kMaxSquash, kMaxSquash)); }

double unsquash_r(double r) {
  r = std::clamp(r, 0.0, 1.0 - 1e-15);
  return std::atanh(r);
}

void validate_config(const OptimizerConfig& cfg) {
  if (cfg.n_grid == 0 || cfg.n_seeds == 0 || cfg.n_seeds > cfg.n_grid)
    throw std::invalid_argument("optimizer config: need 0 < n_seeds <= n_grid");
  if (!(cfg.objective_tol > 0.0)) throw std::invalid_argument("optimizer config: tolerance must be > 0");
}

BlochPoint point_from_coords(const std::vector<double>& x, InputMode mode) {
  BlochPoint pt;
  pt.theta = fold_theta(x[0]);
  pt.phi = wrap_phi(x[1]);
  pt.r = 1.0;
  if (mode == InputMode::mixed) {
    // Signed radius keeps the map smooth through the center of the ball;
    // negative values land on the antipodal direction.
    const double r = squash_r(x[2]);
    if (r < 0.0) {
      pt.theta = kPi - pt.theta;
      pt.phi = wrap_phi(pt.phi + kPi);
      pt.r = -r;
    } else {
      pt.r = r;
    }
  }
  return pt;
}

}  // namespace

HermitianMatrix bloch_state(const BlochPoint& pt) {
  if (!(pt.theta >= 0.0 && pt.theta <= kPi))
    throw std::invalid_argument("bloch_state: theta out of [0, pi]");
  if (!(pt.phi >= 0.0 && pt.phi < 2.0 * kPi))
    throw std::invalid_argument("bloch_state: phi out of [0, 2*pi)");
  if (!(pt.r >= 0.0 && pt.r <= 1.0)) throw std::invalid_argument("bloch_state: r out of [0, 1]");
  const double x = pt.r * std::sin(pt.theta) * std::cos(pt.phi);
  const double y = pt.r * std::sin(pt.theta) * std::sin(pt.phi);
  const double z = pt.r * std::cos(pt.theta);
  ComplexMatrix m(2, 2);
  m.at(0, 0) = 0.5 * (1.0 + z);
  m.at(1, 1) = 0.5 * (1.0 - z);
  m.at(0, 1) = 0.5 * cplx{x, -y};
  m.at(1, 0) = 0.5 * cplx{x, y};
  return HermitianMatrix(std::move(m));
}

std::vector<BlochPoint> sample_candidates(const OptimizerConfig& cfg) {
  validate_config(cfg);
  const std::size_t n = cfg.n_grid;
  std::mt19937_64 rng(cfg.rng_seed);

  auto axis = [&](double lo, double hi) {
    const auto strata = shuffled_strata(rng, n);
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k)
      v[k] = lo + (hi - lo) * (double(strata[k]) + next_unit(rng)) / double(n);
    return v;
  };

  const std::vector<double> thetas = axis(0.0, kPi);
  const std::vector<double> phis = axis(0.0, 2.0 * kPi);
  std::vector<double> rs;
  if (cfg.input_mode == InputMode::mixed) rs = axis(0.0, 1.0);

  std::vector<BlochPoint> pts(n);
  for (std::size_t k = 0; k < n; ++k)
    pts[k] = BlochPoint{thetas[k], phis[k], cfg.input_mode == InputMode::mixed ? rs[k] : 1.0};
  return pts;
}

namespace {

struct NmRun {
  std::vector<double> best_x;
  double best_f;
  bool converged;
};

// One Nelder-Mead descent (maximization ordering) from x0 with the given
// initial simplex edge; `iters` is decremented in place.
NmRun nelder_mead_once(const std::function<double(const std::vector<double>&)>& f,
                       const std::vector<double>& x0, double edge, double tol,
                       std::size_t& iters) {
  const std::size_t dim = x0.size();
  std::vector<std::vector<double>> xs(dim + 1, x0);
  for (std::size_t i = 0; i < dim; ++i) xs[i + 1][i] += edge;
  std::vector<double> fx(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) fx[i] = f(xs[i]);

  auto order = [&]() {
    std::vector<std::size_t> idx(dim + 1);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return fx[a] > fx[b]; });
    std::vector<std::vector<double>> xs2(dim + 1);
    std::vector<double> fx2(dim + 1);
    for (std::size_t k = 0; k <= dim; ++k) {
      xs2[k] = xs[idx[k]];
      fx2[k] = fx[idx[k]];
    }
    xs.swap(xs2);
    fx.swap(fx2);
  };

  order();
  bool converged = false;
  double prev_best = fx[0];
  while (iters > 0) {
    --iters;
    std::vector<double> centroid(dim, 0.0);
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += xs[k][i] / double(dim);

    auto blend = [&](double w) {
      std::vector<double> p(dim);
      for (std::size_t i = 0; i < dim; ++i) p[i] = centroid[i] + w * (centroid[i] - xs[dim][i]);
      return p;
    };

    std::vector<double> xr = blend(1.0);
    const double fr = f(xr);
    if (fr > fx[0]) {
      std::vector<double> xe = blend(2.0);
      const double fe = f(xe);
      if (fe > fr) {
        xs[dim] = xe;
        fx[dim] = fe;
      } else {
        xs[dim] = xr;
        fx[dim] = fr;
      }
    } else if (fr > fx[dim - 1]) {
      xs[dim] = xr;
      fx[dim] = fr;
    } else {
      const bool outside = fr > fx[dim];
      std::vector<double> xc = blend(outside ? 0.5 : -0.5);
      const double fc = f(xc);
      if (fc > (outside ? fr : fx[dim])) {
        xs[dim] = xc;
        fx[dim] = fc;
      } else {
        for (std::size_t k = 1; k <= dim; ++k) {
          for (std::size_t i = 0; i < dim; ++i) xs[k][i] = xs[0][i] + 0.5 * (xs[k][i] - xs[0][i]);
          fx[k] = f(xs[k]);
        }
      }
    }
    order();

    const double spread = fx[0] - fx[dim];
    if (std::abs(fx[0] - prev_best) < tol && spread < tol) {
      converged = true;
      break;
    }
    prev_best = fx[0];
  }
  return NmRun{xs[0], fx[0], converged};
}

}  // namespace

RefineResult refine_local(const std::function<double(const BlochPoint&)>& objective,
                          const BlochPoint& start, const OptimizerConfig& cfg) {
  validate_config(cfg);
  const std::size_t dim = cfg.input_mode == InputMode::mixed ? 3 : 2;
  std::size_t evals = 0;
  auto f = [&](const std::vector<double>& x) {
    ++evals;
    return objective(point_from_coords(x, cfg.input_mode));
  };

  std::vector<double> x0 = {start.theta, start.phi};
  if (dim == 3) x0.push_back(unsquash_r(start.r));

  // The simplex can collapse along flat directions (phase-covariant
  // objectives are constant in phi), trapping the walk in a degenerate
  // hull. Restarting with a fresh simplex at the incumbent until the
  // converged value stops moving escapes that.
  std::size_t iters = cfg.max_iters;
  double edge = 0.05;
  std::vector<double> best_x = x0;
  double best_f = f(x0);
  bool converged = false;
  bool have_prev = false;
  double prev_value = 0.0;
  for (int restart = 0; restart < 20 && iters > 0; ++restart) {
    NmRun run = nelder_mead_once(f, best_x, edge, cfg.objective_tol, iters);
    if (run.best_f > best_f) {
      best_f = run.best_f;
      best_x = run.best_x;
    }
    if (!run.converged) break;  // iteration budget exhausted mid-run
    if (have_prev && std::abs(run.best_f - prev_value) < cfg.objective_tol) {
      converged = true;
      break;
    }
    have_prev = true;
    prev_value = run.best_f;
    edge = std::max(0.5 * edge, 1e-6);
  }

  return RefineResult{point_from_coords(best_x, cfg.input_mode), best_f, converged, evals};
}

OptResult maximize_metric(const KrausChannel& ch, MetricKind metric, const OptimizerConfig& cfg) {
  validate_config(cfg);
  if (ch.d_in() != 2)
    throw std::invalid_argument("maximize_metric: only qubit-input channels are supported");

  const MetricEvaluator eval(ch, metric);
  auto objective = [&](const BlochPoint& pt) { return eval(bloch_state(pt)); };

  const std::vector<BlochPoint> candidates = sample_candidates(cfg);
  std::vector<double> values(candidates.size());
  for (std::size_t k = 0; k < candidates.size(); ++k) values[k] = objective(candidates[k]);

  std::vector<std::size_t> idx(candidates.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (values[a] != values[b]) return values[a] > values[b];
    return a < b;
  });

  OptResult out;
  out.evaluations = candidates.size();
  std::size_t best_seed = 0;
  for (std::size_t s = 0; s < cfg.n_seeds; ++s) {
    const BlochPoint& start = candidates[idx[s]];
    RefineResult r = refine_local(objective, start, cfg);
    out.evaluations += r.evaluations;
    out.seed_trace.push_back(SeedTrace{start, r.value});
    if (s == 0 || r.value > out.best_value) {
      out.best_value = r.value;
      out.best_point = r.point;
      out.converged = r.converged;
      best_seed = s;
    }
  }
  (void)best_seed;
  return out;
}

}  // namespace qcap
