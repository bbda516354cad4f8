#include "qcap/degradability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcap {

namespace {

// Phase-canonical eigenbasis: each column's largest-magnitude component is
// made real positive so two decompositions of equal operators agree.
ComplexMatrix canonical_eigenvectors(const Spectrum& s) {
  ComplexMatrix v = s.eigenvectors;
  for (std::size_t j = 0; j < v.cols(); ++j) {
    std::size_t imax = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < v.rows(); ++i) {
      const double a = std::abs(v.at(i, j));
      if (a > best) {
        best = a;
        imax = i;
      }
    }
    if (best < 1e-300) continue;
    const cplx ph = v.at(imax, j) / best;
    for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, j) /= ph;
  }
  return v;
}

double aligned_residual(const ChoiMatrix& j1, const ChoiMatrix& j2) {
  // Environment marginals of the two Choi operators.
  HermitianMatrix m1 = partial_trace(j1.matrix, {j1.d_in, j1.d_out}, {1});
  HermitianMatrix m2 = partial_trace(j2.matrix, {j2.d_in, j2.d_out}, {1});
  Spectrum s1 = eig_hermitian(m1);
  Spectrum s2 = eig_hermitian(m2);

  const std::size_t n = std::max(s1.eigenvalues.size(), s2.eigenvalues.size());
  double spectral_mismatch = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double a = k < s1.eigenvalues.size() ? s1.eigenvalues[k] : 0.0;
    const double b = k < s2.eigenvalues.size() ? s2.eigenvalues[k] : 0.0;
    spectral_mismatch = std::max(spectral_mismatch, std::abs(a - b));
  }
  if (spectral_mismatch > 1e-9) return spectral_mismatch;

  // W maps environment 1 onto environment 2 through the matched eigenbases.
  ComplexMatrix v1 = canonical_eigenvectors(s1);
  ComplexMatrix v2 = canonical_eigenvectors(s2);
  const std::size_t cols = std::min(v1.cols(), v2.cols());
  ComplexMatrix w(v2.rows(), v1.rows());
  for (std::size_t k = 0; k < cols; ++k)
    for (std::size_t i = 0; i < v2.rows(); ++i)
      for (std::size_t j = 0; j < v1.rows(); ++j)
        w.at(i, j) += v2.at(i, k) * std::conj(v1.at(j, k));

  ComplexMatrix iw = kron(ComplexMatrix::identity(j1.d_in), w);
  ComplexMatrix aligned = iw * j1.matrix.mat() * iw.dagger();
  return max_abs_diff(aligned, j2.matrix.mat());
}

}  // namespace

double verify_degrading(const KrausChannel& n, const KrausChannel& candidate) {
  if (candidate.d_in() != n.d_out())
    throw std::invalid_argument("verify_degrading: candidate input must match channel output");
  const KrausChannel composed = compose(candidate, n);
  const KrausChannel comp = complementary_of(n);
  const ChoiMatrix j1 = choi_of(composed);
  const ChoiMatrix j2 = choi_of(comp);

  double residual;
  if (j1.d_out == j2.d_out) {
    residual = max_abs_diff(j1.matrix.mat(), j2.matrix.mat());
    if (residual > 1e-9) residual = std::min(residual, aligned_residual(j1, j2));
  } else {
    residual = aligned_residual(j1, j2);
  }
  return residual;
}

DegradingMap ad_degrader(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 0.5))
    throw std::invalid_argument(
        "ad_degrader: gamma > 1/2 is the anti-degradable regime, no degrader exists");
  const double delta = (1.0 - 2.0 * gamma) / (1.0 - gamma);
  KrausChannel map = amplitude_damping_channel(delta);
  const double residual = verify_degrading(amplitude_damping_channel(gamma), map);
  return DegradingMap{std::move(map), residual};
}

DegradingMap flagged_degrader(const KrausChannel& u, const KrausChannel& m,
                              const DegradingMap& delta_m, double p) {
  const double pre = verify_degrading(m, delta_m.map);
  if (pre > 1e-9)
    throw std::invalid_argument("flagged_degrader: delta_m does not degrade m (residual " +
                                std::to_string(pre) + ")");

  const KrausChannel flagged = flagged_extension(u, m, p);
  const std::size_t d_out = m.d_out();
  const std::size_t env = 1 + delta_m.map.d_out();  // unitary branch ⊕ noise branch

  std::vector<ComplexMatrix> ks;
  // Flag-0 block: constant map onto the one-dimensional unitary environment.
  for (std::size_t b = 0; b < d_out; ++b) {
    ComplexMatrix a(env, 2 * d_out);
    a.at(0, b) = 1.0;  // |e0><flag 0, b|
    ks.push_back(std::move(a));
  }
  // Flag-1 block: delta_m embedded into environment coordinates 1..env_m.
  for (const auto& t : delta_m.map.kraus()) {
    ComplexMatrix bkr(env, 2 * d_out);
    for (std::size_t i = 0; i < t.rows(); ++i)
      for (std::size_t j = 0; j < d_out; ++j) bkr.at(1 + i, d_out + j) = t.at(i, j);
    ks.push_back(std::move(bkr));
  }

  KrausChannel map(2 * d_out, env, std::move(ks), "flagged_degrader");
  const double residual = verify_degrading(flagged, map);
  return DegradingMap{std::move(map), residual};
}

bool eb_check_ppt(const KrausChannel& ch) {
  if (ch.d_in() != 2 || ch.d_out() != 2)
    throw std::invalid_argument("eb_check_ppt: only qubit-to-qubit channels are supported");
  const ChoiMatrix j = choi_of(ch);
  HermitianMatrix pt = partial_transpose(j.matrix, {j.d_in, j.d_out}, 1);
  const Spectrum s = eig_hermitian(pt);
  return s.eigenvalues.back() >= -1e-10;
}

}  // namespace qcap
