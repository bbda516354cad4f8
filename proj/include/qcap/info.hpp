#pragma once

#include "qcap/channel.hpp"
#include "qcap/matrix.hpp"

namespace qcap {

enum class MetricKind { coherent_info, reverse_coherent_info, ea_mutual_info };

// Canonical purification |Psi_rho> = sum_i sqrt(lambda_i) |i>_R |v_i>_A built
// from the eigendecomposition of rho, reference system first.
struct PurifiedInput {
  HermitianMatrix rho;
  ComplexMatrix purification;  // column vector of dimension dim(rho)^2
};

PurifiedInput purify(const HermitianMatrix& rho);

// Joint state (id_R ⊗ N)(|Psi_rho><Psi_rho|) on R ⊗ B.
HermitianMatrix joint_with_reference(const KrausChannel& ch, const HermitianMatrix& rho);

// I_c = H(N(rho)) - H(N^c(rho)), in bits.
double coherent_information(const KrausChannel& ch, const HermitianMatrix& rho);

// RCI = H(rho) - H((id ⊗ N)(Psi_rho)), in bits.
double reverse_coherent_information(const KrausChannel& ch, const HermitianMatrix& rho);

// I(A;B) = H(rho) + H(N(rho)) - H((id ⊗ N)(Psi_rho)), in bits.
double ea_mutual_information(const KrausChannel& ch, const HermitianMatrix& rho);

// Hashing bound 1 - H2(p) - p log2(3) for the Pauli-convention depolarizing
// parameter.
double hashing_bound(double p);

double evaluate_metric(MetricKind kind, const KrausChannel& ch, const HermitianMatrix& rho);

// Caches the complementary channel so repeated evaluations (optimizer inner
// loop) skip rebuilding it.
class MetricEvaluator {
 public:
  MetricEvaluator(const KrausChannel& ch, MetricKind kind);
  double operator()(const HermitianMatrix& rho) const;

 private:
  KrausChannel channel_;
  KrausChannel complementary_;
  MetricKind kind_;
};

}  // namespace qcap
