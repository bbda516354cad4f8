#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qcap/channel.hpp"
#include "qcap/matrix.hpp"

namespace qcap {

// Frobenius-nearest PSD matrix: eigendecompose and clamp negative
// eigenvalues to zero.
HermitianMatrix project_psd(const HermitianMatrix& m);

// Linear maps over Hermitian operands used by the SDP container. Each kind
// carries its exact adjoint.
enum class SdpMapKind {
  scale,              // X -> f X
  transpose_out,      // X on A⊗B -> f X^{T_B}              (self-adjoint)
  trace_out,          // X on A⊗B -> f Tr_B X               (adjoint: W -> f W⊗I_B)
  kron_identity_out,  // W on A   -> f W⊗I_B                (adjoint: X -> f Tr_B X)
  full_trace,         // X        -> f [Tr X]  (1x1)        (adjoint: s -> f s I)
  inner_with,         // X        -> [Tr(G X)] (1x1)        (adjoint: s -> s G)
};

struct SdpLinearMap {
  SdpMapKind kind = SdpMapKind::scale;
  double factor = 1.0;
  std::size_t dim_a = 0, dim_b = 0;  // bipartite split for the *_out kinds
  std::size_t operand_dim = 0;
  std::optional<ComplexMatrix> matrix;  // inner_with only

  static SdpLinearMap scaled(double f, std::size_t dim);
  static SdpLinearMap transpose_output(double f, std::size_t da, std::size_t db);
  static SdpLinearMap trace_output(double f, std::size_t da, std::size_t db);
  static SdpLinearMap kron_identity_output(double f, std::size_t da, std::size_t db);
  static SdpLinearMap trace_functional(double f, std::size_t dim);
  static SdpLinearMap inner_product_with(const ComplexMatrix& g);

  std::size_t output_dim() const;
  ComplexMatrix apply(const ComplexMatrix& x) const;
  ComplexMatrix adjoint(const ComplexMatrix& y) const;
};

struct SdpVariable {
  std::size_t dim;
  bool psd;
};

struct SdpTerm {
  std::size_t var;
  SdpLinearMap map;
};

enum class SdpSense { equal, succeq };  // sum of terms (= | ⪰) target

struct SdpConstraint {
  std::vector<SdpTerm> terms;
  HermitianMatrix target;
  SdpSense sense;
};

// Optional objective: minimize the spectral norm of the (PSD-valued) image
// sum of terms, handled through bisection on the epigraph t·I ⪰ image.
struct SdpObjective {
  std::vector<SdpTerm> terms;
  std::size_t image_dim;
  double bracket_hi = 0.0;  // 0 means: use image_dim
};

struct SdpProblem {
  std::vector<SdpVariable> variables;
  std::vector<SdpConstraint> constraints;
  std::optional<SdpObjective> objective;
};

struct SdpSolution {
  double optimal_value = 0.0;
  std::vector<HermitianMatrix> variables;
  double primal_residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

// Dykstra-corrected alternating projections between the PSD product cone and
// the affine constraint set; spectral-norm objectives run an outer bisection
// on the epigraph level to tolerance 1e-6.
SdpSolution solve_sdp_admm(const SdpProblem& prob, double tol = 1e-6,
                           std::size_t max_iters = 50000);

// Standard max-Rains program for a Choi operator J:
//   Gamma = min ||Tr_out(V+Y)||_inf  s.t.  V,Y ⪰ 0, (V-Y)^{T_out} ⪰ J.
SdpProblem make_max_rains_problem(const ChoiMatrix& j);

struct MaxRainsResult {
  double value_bits;       // log2(gamma_primal)
  double gamma_primal;     // certified upper side
  double gamma_dual;       // certified lower side (feasible dual value)
  double duality_gap_bits; // log2(gamma_primal) - log2(gamma_dual)
  SdpSolution primal;
};

struct SolverError : std::runtime_error {
  explicit SolverError(const std::string& what, double best) : std::runtime_error(what), best_bound(best) {}
  double best_bound;
};

MaxRainsResult max_rains_bound_full(const KrausChannel& ch);

// log2 of the max-Rains value; throws SolverError carrying the best bound
// found if the solver fails to converge.
double max_rains_bound(const KrausChannel& ch);

}  // namespace qcap
