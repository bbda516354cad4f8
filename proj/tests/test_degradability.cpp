#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcap/degradability.hpp"
#include "qcap/optimize.hpp"

using namespace qcap;

TEST_CASE("AD composition law oracle: AD_a after AD_b equals AD_{a+b-ab}") {
  for (double a : {0.2, 0.5, 0.8})
    for (double b : {0.1, 0.4, 0.7}) {
      const KrausChannel lhs = compose(amplitude_damping_channel(a), amplitude_damping_channel(b));
      const KrausChannel rhs = amplitude_damping_channel(a + b - a * b);
      CHECK(max_abs_diff(choi_of(lhs).matrix.mat(), choi_of(rhs).matrix.mat()) <= 1e-12);
    }
}

TEST_CASE("ad_degrader parameter and residual") {
  const DegradingMap d0 = ad_degrader(0.0);
  CHECK(d0.residual <= 1e-10);

  const DegradingMap dhalf = ad_degrader(0.5);
  // delta = 0: the degrader reduces to the identity channel.
  CHECK(max_abs_diff(choi_of(dhalf.map).matrix.mat(), choi_of(identity_channel(2)).matrix.mat()) <=
        1e-12);
  CHECK(dhalf.residual <= 1e-10);

  const double gamma = 0.3;
  const DegradingMap d = ad_degrader(gamma);
  const double delta = (1.0 - 2.0 * gamma) / (1.0 - gamma);
  CHECK(max_abs_diff(choi_of(d.map).matrix.mat(),
                     choi_of(amplitude_damping_channel(delta)).matrix.mat()) <= 1e-12);
  CHECK(d.residual <= 1e-10);

  CHECK_THROWS_AS(ad_degrader(0.6), std::invalid_argument);
}

TEST_CASE("ad_degrader residual across the degradable regime") {
  for (int k = 0; k <= 10; ++k) {
    const double gamma = 0.05 * k;
    CHECK(ad_degrader(gamma).residual <= 1e-10);
  }
}

TEST_CASE("verify_degrading rejects a non-degrader") {
  const double res = verify_degrading(amplitude_damping_channel(0.3), identity_channel(2));
  CHECK(res >= 1e-3);
}

TEST_CASE("verify_degrading dimension checks") {
  CHECK_THROWS_AS(verify_degrading(amplitude_damping_channel(0.3), identity_channel(3)),
                  std::invalid_argument);
}

TEST_CASE("flagged degrader certifies the flagged extension") {
  const KrausChannel u = identity_channel(2);

  {
    const KrausChannel m = amplitude_damping_channel(0.3);
    const DegradingMap dm = flagged_degrader(u, m, ad_degrader(0.3), 0.5);
    CHECK(dm.residual <= 1e-9);
    CHECK(validate_cptp(dm.map).pass);
  }
  {
    // p = 1: only the constant branch is active.
    const KrausChannel m = amplitude_damping_channel(0.3);
    const DegradingMap dm = flagged_degrader(u, m, ad_degrader(0.3), 1.0);
    CHECK(dm.residual <= 1e-10);
  }
  {
    const KrausChannel rx = rotation_unitary_channel(0, 0.7);
    const KrausChannel m = amplitude_damping_channel(0.2);
    const DegradingMap dm = flagged_degrader(rx, m, ad_degrader(0.2), 0.3);
    CHECK(dm.residual <= 1e-9);
  }

  // A broken delta_m is rejected up front.
  const DegradingMap bogus{identity_channel(2), 0.0};
  CHECK_THROWS_AS(flagged_degrader(u, amplitude_damping_channel(0.3), bogus, 0.5),
                  std::invalid_argument);
}

TEST_CASE("flagged degrader across the p x gamma grid") {
  const KrausChannel u = identity_channel(2);
  for (int pi = 1; pi <= 9; ++pi)
    for (int gi = 1; gi <= 5; ++gi) {
      const double p = 0.1 * pi;
      const double gamma = 0.1 * gi;
      const KrausChannel m = amplitude_damping_channel(gamma);
      const DegradingMap dm = flagged_degrader(u, m, ad_degrader(gamma), p);
      CHECK(dm.residual <= 1e-9);
    }
}

TEST_CASE("PPT entanglement-breaking check") {
  CHECK_FALSE(eb_check_ppt(identity_channel(2)));
  CHECK_FALSE(eb_check_ppt(depolarizing_iso_channel(0.5)));
  CHECK(eb_check_ppt(depolarizing_iso_channel(2.0 / 3.0)));
  CHECK(eb_check_ppt(depolarizing_iso_channel(0.9)));

  // Eigenvalue oracle: min eigenvalue of the partially transposed Choi of
  // iso(p) is 3p/2 - 1.
  for (double p : {0.2, 0.5, 0.65, 0.7}) {
    const ChoiMatrix j = choi_of(depolarizing_iso_channel(p));
    const Spectrum s = eig_hermitian(partial_transpose(j.matrix, {2, 2}, 1));
    CHECK(s.eigenvalues.back() == doctest::Approx(1.5 * p - 1.0).epsilon(1e-12));
  }

  // Sharp transition around p = 2/3.
  CHECK_FALSE(eb_check_ppt(depolarizing_iso_channel(2.0 / 3.0 - 1e-3)));
  CHECK(eb_check_ppt(depolarizing_iso_channel(2.0 / 3.0 + 1e-3)));

  CHECK_THROWS_AS(eb_check_ppt(flagged_extension(identity_channel(2),
                                                 amplitude_damping_channel(0.1), 0.5)),
                  std::invalid_argument);
}

TEST_CASE("verified degrader implies non-negative optimized Ic") {
  OptimizerConfig cfg;
  cfg.input_mode = InputMode::mixed;
  cfg.rng_seed = 77;
  for (double gamma : {0.1, 0.3, 0.5}) {
    REQUIRE(ad_degrader(gamma).residual <= 1e-10);
    OptResult r = maximize_metric(amplitude_damping_channel(gamma), MetricKind::coherent_info, cfg);
    CHECK(r.best_value >= -1e-9);
  }
}
