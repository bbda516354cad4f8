#include "qcap/info.hpp"

#include <cmath>
#include <stdexcept>

namespace qcap {

PurifiedInput purify(const HermitianMatrix& rho) {
  const std::size_t d = rho.dim();
  if (d * d > kMaxDim)
    throw std::invalid_argument("purify: reference ⊗ system dimension exceeds 16");
  const Spectrum s = eig_hermitian(rho);
  ComplexMatrix psi(d * d, 1);
  for (std::size_t i = 0; i < d; ++i) {
    const double lam = std::max(0.0, s.eigenvalues[i]);
    const double w = std::sqrt(lam);
    for (std::size_t a = 0; a < d; ++a) psi.at(i * d + a, 0) += w * s.eigenvectors.at(a, i);
  }
  return PurifiedInput{rho, std::move(psi)};
}

HermitianMatrix joint_with_reference(const KrausChannel& ch, const HermitianMatrix& rho) {
  if (rho.dim() != ch.d_in()) throw std::invalid_argument("joint_with_reference: dimension mismatch");
  const std::size_t d = rho.dim();
  const PurifiedInput p = purify(rho);
  const std::size_t n = d * ch.d_out();
  if (n > kMaxDim) throw std::invalid_argument("joint_with_reference: joint dimension exceeds 16");
  ComplexMatrix joint(n, n);
  for (const auto& k : ch.kraus()) {
    // w = (I_R ⊗ K)|Psi>
    ComplexMatrix w(n, 1);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t a = 0; a < ch.d_out(); ++a) {
        cplx v = 0.0;
        for (std::size_t m = 0; m < d; ++m) v += k.at(a, m) * p.purification.at(r * d + m, 0);
        w.at(r * ch.d_out() + a, 0) = v;
      }
    joint += w * w.dagger();
  }
  return HermitianMatrix(std::move(joint));
}

double coherent_information(const KrausChannel& ch, const HermitianMatrix& rho) {
  return MetricEvaluator(ch, MetricKind::coherent_info)(rho);
}

double reverse_coherent_information(const KrausChannel& ch, const HermitianMatrix& rho) {
  return MetricEvaluator(ch, MetricKind::reverse_coherent_info)(rho);
}

double ea_mutual_information(const KrausChannel& ch, const HermitianMatrix& rho) {
  return MetricEvaluator(ch, MetricKind::ea_mutual_info)(rho);
}

double hashing_bound(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("hashing_bound: p out of [0,1]");
  double h2 = 0.0;
  if (p > 0.0) h2 -= p * std::log2(p);
  if (p < 1.0) h2 -= (1.0 - p) * std::log2(1.0 - p);
  return 1.0 - h2 - p * std::log2(3.0);
}

double evaluate_metric(MetricKind kind, const KrausChannel& ch, const HermitianMatrix& rho) {
  return MetricEvaluator(ch, kind)(rho);
}

MetricEvaluator::MetricEvaluator(const KrausChannel& ch, MetricKind kind)
    : channel_(ch), complementary_(complementary_of(ch)), kind_(kind) {}

double MetricEvaluator::operator()(const HermitianMatrix& rho) const {
  switch (kind_) {
    case MetricKind::coherent_info:
      return von_neumann_entropy(apply_channel(channel_, rho)) -
             von_neumann_entropy(apply_channel(complementary_, rho));
    case MetricKind::reverse_coherent_info:
      return von_neumann_entropy(rho) - von_neumann_entropy(joint_with_reference(channel_, rho));
    case MetricKind::ea_mutual_info:
      return von_neumann_entropy(rho) + von_neumann_entropy(apply_channel(channel_, rho)) -
             von_neumann_entropy(joint_with_reference(channel_, rho));
  }
  throw std::invalid_argument("evaluate_metric: unknown metric kind");
}

}  // namespace qcap
