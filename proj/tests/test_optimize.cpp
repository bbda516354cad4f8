#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qcap/optimize.hpp"

using namespace qcap;

namespace {

constexpr double kPi = 3.14159265358979323846;

double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double entropy_from_det(double det) {
  // Eigenvalues of a trace-1 qubit state with determinant det.
  const double disc = std::sqrt(std::max(0.0, 1.0 - 4.0 * det));
  return binary_entropy(0.5 * (1.0 - disc));
}

// Closed-form Ic of AD(gamma) on the Bloch point (theta, r) in the x-z plane.
// Output and environment are AD(gamma) and AD(1-gamma) images of rho; both
// are 2x2, so their entropies follow from trace and determinant alone.
double ad_ic_closed_form(double gamma, double theta, double r) {
  const double x = r * std::sin(theta), z = r * std::cos(theta);
  const double p11 = 0.5 * (1.0 - z);           // excited population
  const double off2 = 0.25 * x * x;             // |rho01|^2
  auto branch = [&](double g) {
    const double b11 = (1.0 - g) * p11;
    return (1.0 - b11) * b11 - (1.0 - g) * off2;
  };
  return entropy_from_det(branch(gamma)) - entropy_from_det(branch(1.0 - gamma));
}

// Dense-grid reference maximum over the (theta, r) plane.
double ad_ic_grid_oracle(double gamma, std::size_t n_theta = 1000, std::size_t n_r = 1000) {
  double best = -1e300;
  for (std::size_t i = 0; i < n_theta; ++i) {
    const double theta = kPi * double(i) / double(n_theta - 1);
    for (std::size_t j = 0; j < n_r; ++j) {
      const double r = double(j) / double(n_r - 1);
      best = std::max(best, ad_ic_closed_form(gamma, theta, r));
    }
  }
  return best;
}

OptimizerConfig mixed_cfg(std::uint64_t seed = 12345) {
  OptimizerConfig cfg;
  cfg.input_mode = InputMode::mixed;
  cfg.rng_seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("bloch_state known points") {
  CHECK(max_abs_diff(bloch_state({0.0, 0.0, 1.0}).mat(), HermitianMatrix::diag({1.0, 0.0}).mat()) <=
        1e-15);
  CHECK(max_abs_diff(bloch_state({kPi, 0.0, 1.0}).mat(), HermitianMatrix::diag({0.0, 1.0}).mat()) <=
        1e-12);
  CHECK(max_abs_diff(bloch_state({1.1, 2.2, 0.0}).mat(), HermitianMatrix::diag({0.5, 0.5}).mat()) <=
        1e-12);
  CHECK_THROWS_AS(bloch_state({-0.1, 0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(bloch_state({0.0, 0.0, 1.5}), std::invalid_argument);
}

TEST_CASE("bloch_state purity at r=1") {
  const Spectrum s = eig_hermitian(bloch_state({0.7, 1.3, 1.0}));
  CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(s.eigenvalues[1]) <= 1e-12);
}

TEST_CASE("latin hypercube stratification") {
  OptimizerConfig cfg;
  cfg.n_grid = 4;
  cfg.n_seeds = 1;
  cfg.rng_seed = 7;
  auto pts = sample_candidates(cfg);
  REQUIRE(pts.size() == 4);
  std::vector<bool> hit(4, false);
  for (const auto& p : pts) {
    const std::size_t stratum = std::min<std::size_t>(3, std::size_t(4.0 * p.theta / kPi));
    CHECK_FALSE(hit[stratum]);
    hit[stratum] = true;
    CHECK(p.r == 1.0);  // pure mode pins the radius
  }
}

TEST_CASE("sampling is deterministic in the seed") {
  OptimizerConfig cfg = mixed_cfg(99);
  auto a = sample_candidates(cfg);
  auto b = sample_candidates(cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].theta == b[k].theta);
    CHECK(a[k].phi == b[k].phi);
    CHECK(a[k].r == b[k].r);
  }
}

TEST_CASE("sample marginals are near-uniform") {
  OptimizerConfig cfg;
  cfg.n_grid = 512;
  cfg.rng_seed = 3;
  auto pts = sample_candidates(cfg);
  double mean_theta = 0.0;
  for (const auto& p : pts) mean_theta += p.theta / double(pts.size());
  CHECK(std::abs(mean_theta - kPi / 2.0) <= 0.1);
}

TEST_CASE("refine_local on a quadratic and on a constant") {
  OptimizerConfig cfg;
  cfg.rng_seed = 0;
  auto quad = [](const BlochPoint& p) { return -(p.theta - 1.0) * (p.theta - 1.0); };
  RefineResult r = refine_local(quad, {0.5, 1.0, 1.0}, cfg);
  CHECK(r.converged);
  CHECK(r.point.theta == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(r.value >= quad({0.5, 1.0, 1.0}) - 1e-12);

  auto constant = [](const BlochPoint&) { return 0.25; };
  RefineResult c = refine_local(constant, {0.5, 1.0, 1.0}, cfg);
  CHECK(c.converged);
  CHECK(c.value == 0.25);
}

TEST_CASE("refinement from scattered starts agrees on AD") {
  // Mixed-input refinement of Ic for AD(0.2): every start lands on the same
  // value, which the dense-grid oracle certifies as the maximum.
  const KrausChannel ch = amplitude_damping_channel(0.2);
  const MetricEvaluator eval(ch, MetricKind::coherent_info);
  OptimizerConfig cfg = mixed_cfg();
  auto objective = [&](const BlochPoint& p) { return eval(bloch_state(p)); };

  const double oracle = ad_ic_grid_oracle(0.2);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.1, 0.9);
  double first = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    BlochPoint start{u(rng) * kPi, u(rng) * 2.0 * kPi, u(rng)};
    RefineResult r = refine_local(objective, start, cfg);
    if (rep == 0) first = r.value;
    CHECK(r.value == doctest::Approx(first).epsilon(1e-7));
  }
  CHECK(first == doctest::Approx(oracle).epsilon(1e-5));
}

TEST_CASE("maximize_metric on noiseless and depolarizing channels") {
  // Mixed mode reaches the qubit limit for the noiseless channel.
  OptResult noiseless = maximize_metric(amplitude_damping_channel(0.0),
                                        MetricKind::coherent_info, mixed_cfg());
  CHECK(noiseless.best_value == doctest::Approx(1.0).epsilon(1e-6));

  // Pure inputs keep receiver and environment at equal entropy, so the
  // pure-mode maximum sits at zero for every channel.
  OptimizerConfig pure;
  pure.rng_seed = 12345;
  OptResult flat = maximize_metric(amplitude_damping_channel(0.0), MetricKind::coherent_info, pure);
  CHECK(std::abs(flat.best_value) <= 1e-9);

  // Mixed-mode optimizer recovers the hashing value with r* -> 0.
  OptResult dep = maximize_metric(depolarizing_pauli_channel(0.1), MetricKind::coherent_info,
                                  mixed_cfg());
  CHECK(dep.best_value == doctest::Approx(0.3725082).epsilon(1e-5));
  CHECK(dep.best_point.r <= 1e-3);

  // AD(0.25) against the dense-grid oracle.
  OptResult ad = maximize_metric(amplitude_damping_channel(0.25), MetricKind::coherent_info,
                                 mixed_cfg());
  CHECK(ad.best_value == doctest::Approx(ad_ic_grid_oracle(0.25)).epsilon(1e-5));

  CHECK_THROWS_AS(maximize_metric(identity_channel(3), MetricKind::coherent_info, mixed_cfg()),
                  std::invalid_argument);
}

TEST_CASE("maximize_metric is deterministic") {
  const KrausChannel ch = amplitude_damping_channel(0.15);
  OptResult a = maximize_metric(ch, MetricKind::coherent_info, mixed_cfg(2024));
  OptResult b = maximize_metric(ch, MetricKind::coherent_info, mixed_cfg(2024));
  CHECK(a.best_value == b.best_value);
  CHECK(a.best_point.theta == b.best_point.theta);
  CHECK(a.best_point.phi == b.best_point.phi);
  CHECK(a.best_point.r == b.best_point.r);
  CHECK(a.evaluations == b.evaluations);
  REQUIRE(a.seed_trace.size() == b.seed_trace.size());
  for (std::size_t k = 0; k < a.seed_trace.size(); ++k)
    CHECK(a.seed_trace[k].refined_value == b.seed_trace[k].refined_value);
}

TEST_CASE("best value dominates the seed trace") {
  OptResult r = maximize_metric(gadc_channel(0.3, 0.1), MetricKind::coherent_info, mixed_cfg(5));
  double best = -1e300;
  for (const auto& t : r.seed_trace) best = std::max(best, t.refined_value);
  CHECK(r.best_value == doctest::Approx(best).epsilon(1e-15));
}

TEST_CASE("AD sweep is non-increasing and tracks the oracle") {
  OptimizerConfig cfg = mixed_cfg();
  double prev = 2.0;
  for (int k = 0; k <= 10; ++k) {
    const double gamma = 0.05 * k;
    OptResult r = maximize_metric(amplitude_damping_channel(gamma), MetricKind::coherent_info, cfg);
    CHECK(r.best_value == doctest::Approx(ad_ic_grid_oracle(gamma, 400, 400)).epsilon(2e-5));
    CHECK(r.best_value <= prev + 1e-5);
    prev = r.best_value;
  }
}

TEST_CASE("phase offsets do not move the optimum for phase-covariant channels") {
  const KrausChannel ch = amplitude_damping_channel(0.2);
  const MetricEvaluator eval(ch, MetricKind::coherent_info);
  OptimizerConfig cfg = mixed_cfg(31);
  auto objective = [&](const BlochPoint& p) { return eval(bloch_state(p)); };

  auto refined_best = [&](double phi_offset) {
    auto pts = sample_candidates(cfg);
    for (auto& p : pts) p.phi = std::fmod(p.phi + phi_offset, 2.0 * kPi);
    std::vector<std::pair<double, BlochPoint>> scored;
    for (const auto& p : pts) scored.push_back({objective(p), p});
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    double best = -1e300;
    for (std::size_t s = 0; s < cfg.n_seeds; ++s)
      best = std::max(best, refine_local(objective, scored[s].second, cfg).value);
    return best;
  };

  CHECK(refined_best(0.0) == doctest::Approx(refined_best(1.234)).epsilon(1e-7));
}

TEST_CASE("pure-mode results never exceed mixed-mode results") {
  for (const auto& ch : {amplitude_damping_channel(0.2), depolarizing_iso_channel(0.1),
                         gadc_channel(0.5, 0.2)}) {
    for (MetricKind metric : {MetricKind::coherent_info, MetricKind::ea_mutual_info}) {
      OptimizerConfig pure;
      pure.rng_seed = 8;
      OptimizerConfig mixed = mixed_cfg(8);
      OptResult a = maximize_metric(ch, metric, pure);
      OptResult b = maximize_metric(ch, metric, mixed);
      CHECK(a.best_value <= b.best_value + 1e-9);
    }
  }
}
