#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qcap/info.hpp"

using namespace qcap;

namespace {

double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

HermitianMatrix random_state(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = cplx{g(rng), g(rng)};
  ComplexMatrix p = m * m.dagger();
  return HermitianMatrix(p * cplx{1.0 / p.trace().real(), 0.0});
}

HermitianMatrix random_pure(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix v(2, 1);
  v.at(0, 0) = cplx{g(rng), g(rng)};
  v.at(1, 0) = cplx{g(rng), g(rng)};
  ComplexMatrix p = v * v.dagger();
  return HermitianMatrix(p * cplx{1.0 / p.trace().real(), 0.0});
}

// Seeded random CPTP channel: k Gaussian blocks normalized through S^{-1/2}.
KrausChannel random_channel(std::mt19937_64& rng, std::size_t n_kraus) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<ComplexMatrix> raw;
  ComplexMatrix s(2, 2);
  for (std::size_t k = 0; k < n_kraus; ++k) {
    ComplexMatrix m(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m.at(i, j) = cplx{g(rng), g(rng)};
    s += m.dagger() * m;
    raw.push_back(std::move(m));
  }
  const Spectrum sp = eig_hermitian(HermitianMatrix(s));
  ComplexMatrix inv_sqrt(2, 2);
  for (std::size_t k = 0; k < 2; ++k) {
    const double w = 1.0 / std::sqrt(sp.eigenvalues[k]);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        inv_sqrt.at(i, j) += w * sp.eigenvectors.at(i, k) * std::conj(sp.eigenvectors.at(j, k));
  }
  std::vector<ComplexMatrix> ks;
  for (const auto& m : raw) ks.push_back(m * inv_sqrt);
  return KrausChannel(2, 2, std::move(ks), "random");
}

const HermitianMatrix kMaxMixed = HermitianMatrix::diag({0.5, 0.5});

}  // namespace

TEST_CASE("purification marginal recovers the input state") {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 10; ++rep) {
    HermitianMatrix rho = random_state(rng, 2);
    PurifiedInput p = purify(rho);
    HermitianMatrix proj(p.purification * p.purification.dagger());
    HermitianMatrix marg = partial_trace(proj, {2, 2}, {1});
    CHECK(max_abs_diff(marg.mat(), rho.mat()) <= 1e-10);
  }
}

TEST_CASE("coherent information known values") {
  CHECK(coherent_information(identity_channel(2), kMaxMixed) == doctest::Approx(1.0).epsilon(1e-10));

  // At the maximally mixed input the Pauli depolarizing channel attains the
  // hashing value.
  CHECK(coherent_information(depolarizing_pauli_channel(0.05), kMaxMixed) ==
        doctest::Approx(0.6343549).epsilon(1e-6));
}

TEST_CASE("coherent information vanishes on pure inputs") {
  // For any channel and rank-1 input the joint output is pure, so receiver
  // and environment spectra coincide term by term.
  std::mt19937_64 rng(22);
  for (const auto& ch : {depolarizing_pauli_channel(0.1), amplitude_damping_channel(0.3),
                         gadc_channel(0.4, 0.2)}) {
    for (int rep = 0; rep < 5; ++rep) {
      HermitianMatrix psi = random_pure(rng);
      CHECK(std::abs(coherent_information(ch, psi)) <= 1e-9);
    }
  }
  HermitianMatrix ground = HermitianMatrix::diag({1.0, 0.0});
  CHECK(std::abs(coherent_information(depolarizing_pauli_channel(0.1), ground)) <= 1e-9);

  // Spectrum oracle behind the claim: the environment state of dep(p) at |0><0|
  // has eigenvalues {1-2p/3, 2p/3, 0, 0}, not the branch-probability diagonal.
  const double p = 0.1;
  const KrausChannel comp = complementary_of(depolarizing_pauli_channel(p));
  const Spectrum env = eig_hermitian(apply_channel(comp, ground));
  CHECK(env.eigenvalues[0] == doctest::Approx(1.0 - 2.0 * p / 3.0).epsilon(1e-12));
  CHECK(env.eigenvalues[1] == doctest::Approx(2.0 * p / 3.0).epsilon(1e-12));
  CHECK(std::abs(env.eigenvalues[2]) <= 1e-12);
  CHECK(std::abs(env.eigenvalues[3]) <= 1e-12);
}

TEST_CASE("reverse coherent information known values") {
  CHECK(reverse_coherent_information(identity_channel(2), kMaxMixed) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(reverse_coherent_information(amplitude_damping_channel(0.0), kMaxMixed) ==
        doctest::Approx(coherent_information(amplitude_damping_channel(0.0), kMaxMixed))
            .epsilon(1e-10));

  // Joint-spectrum oracle: (id ⊗ AD_g)(Bell) has eigenvalues {1-g/2, g/2},
  // so RCI(AD_g, I/2) = 1 - H2(g/2).
  const double gamma = 0.3;
  CHECK(reverse_coherent_information(amplitude_damping_channel(gamma), kMaxMixed) ==
        doctest::Approx(1.0 - binary_entropy(gamma / 2.0)).epsilon(1e-10));
}

TEST_CASE("entanglement-assisted mutual information known values") {
  CHECK(ea_mutual_information(identity_channel(2), kMaxMixed) == doctest::Approx(2.0).epsilon(1e-10));

  // Joint-spectrum oracle: eigenvalues {1-p, p/3, p/3, p/3} give
  // CE = 2 - H2(p) - p log2(3) = 1 + hashing(p).
  const double p = 0.15;
  double expect = 2.0 - binary_entropy(p) - p * std::log2(3.0);
  CHECK(ea_mutual_information(depolarizing_pauli_channel(p), kMaxMixed) ==
        doctest::Approx(expect).epsilon(1e-10));
  CHECK(expect == doctest::Approx(1.0 + hashing_bound(p)).epsilon(1e-12));

  std::mt19937_64 rng(23);
  HermitianMatrix rho = random_state(rng, 2);
  CHECK(std::abs(ea_mutual_information(depolarizing_iso_channel(1.0), rho)) <= 1e-9);
}

TEST_CASE("hashing bound reference values") {
  CHECK(hashing_bound(0.05) == doctest::Approx(0.6343549).epsilon(1e-6));
  CHECK(hashing_bound(0.10) == doctest::Approx(0.3725082).epsilon(1e-6));
  CHECK(hashing_bound(0.15) == doctest::Approx(0.1524153).epsilon(1e-6));
  CHECK(hashing_bound(0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(hashing_bound(1.5), std::invalid_argument);
}

TEST_CASE("hashing bound agrees with Ic at the maximally mixed input") {
  for (int k = 0; k <= 25; ++k) {
    const double p = k / 100.0;
    CHECK(coherent_information(depolarizing_pauli_channel(p), kMaxMixed) ==
          doctest::Approx(hashing_bound(p)).epsilon(1e-9));
  }
}

TEST_CASE("data-processing ordering at a fixed input") {
  std::mt19937_64 rng(24);
  for (int rep = 0; rep < 50; ++rep) {
    const KrausChannel ch = random_channel(rng, 1 + rep % 4);
    HermitianMatrix rho = random_state(rng, 2);
    const double ic = coherent_information(ch, rho);
    const double rci = reverse_coherent_information(ch, rho);
    const double ce = ea_mutual_information(ch, rho);
    CHECK(ce >= ic - 1e-9);
    CHECK(ce >= rci - 1e-9);
  }
}

TEST_CASE("environment entropy equals joint reference-output entropy") {
  std::mt19937_64 rng(25);
  for (int rep = 0; rep < 20; ++rep) {
    const KrausChannel ch = random_channel(rng, 1 + rep % 3);
    HermitianMatrix rho = random_state(rng, 2);
    const KrausChannel comp = complementary_of(ch);
    const double h_env = von_neumann_entropy(apply_channel(comp, rho));
    const double h_joint = von_neumann_entropy(joint_with_reference(ch, rho));
    CHECK(h_env == doctest::Approx(h_joint).epsilon(1e-9));
  }
}

TEST_CASE("unitary channels: Ic equals the input entropy") {
  std::mt19937_64 rng(26);
  for (int rep = 0; rep < 10; ++rep) {
    const KrausChannel u = rotation_unitary_channel(rep % 3, 0.1 + 0.2 * rep);
    HermitianMatrix rho = random_state(rng, 2);
    CHECK(std::abs(coherent_information(u, rho) - von_neumann_entropy(rho)) <= 1e-10);
  }
}
