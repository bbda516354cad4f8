#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcap/matrix.hpp"

namespace qcap {

// CPTP map as a finite Kraus list. Trace preservation within 1e-9 is a
// construction invariant; `unchecked` skips it for diagnostics.
class KrausChannel {
 public:
  KrausChannel(std::size_t d_in, std::size_t d_out, std::vector<ComplexMatrix> kraus,
               std::string label = "");

  static KrausChannel unchecked(std::size_t d_in, std::size_t d_out,
                                std::vector<ComplexMatrix> kraus, std::string label = "");

  std::size_t d_in() const { return d_in_; }
  std::size_t d_out() const { return d_out_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  const std::string& label() const { return label_; }

 private:
  KrausChannel() = default;
  std::size_t d_in_ = 0, d_out_ = 0;
  std::vector<ComplexMatrix> kraus_;
  std::string label_;
};

// Unnormalized Choi operator J = sum_ij |i><j| ⊗ N(|i><j|), trace d_in.
struct ChoiMatrix {
  std::size_t d_in, d_out;
  HermitianMatrix matrix;

  // Validates PSD within 1e-9 and Tr_out(J) = I within 1e-9.
  ChoiMatrix(std::size_t d_in, std::size_t d_out, HermitianMatrix m);
};

enum class ChannelKind {
  unitary,
  amplitude_damping,
  gadc,
  depolarizing_iso,
  depolarizing_pauli,
  pauli,
  custom,
};

struct ChannelSpec {
  ChannelKind kind;
  std::map<std::string, double> params;
  std::optional<std::vector<ComplexMatrix>> custom_kraus;
};

// Canonical builders behind ChannelSpec:
//   amplitude_damping: gamma in [0,1]; two Kraus operators.
//   gadc:              gamma, nth in [0,1]; standard thermal 4-Kraus form.
//   depolarizing_iso:  p in [0,1]; (1-p) rho + p I/2.
//   depolarizing_pauli:p in [0,1]; (1-p) rho + p/3 (X rho X + Y rho Y + Z rho Z).
//   pauli:             px, py, pz >= 0 with px+py+pz <= 1.
//   unitary:           axis in {0,1,2}, theta; U = exp(-i theta/2 sigma_axis).
//   custom:            Kraus list given explicitly.
KrausChannel build_channel(const ChannelSpec& spec);

KrausChannel amplitude_damping_channel(double gamma);
KrausChannel gadc_channel(double gamma, double nth);
KrausChannel depolarizing_iso_channel(double p);
KrausChannel depolarizing_pauli_channel(double p);
KrausChannel pauli_channel(double px, double py, double pz);
KrausChannel rotation_unitary_channel(std::size_t axis, double theta);
KrausChannel identity_channel(std::size_t dim = 2);

struct CptpDiagnostics {
  double tp_deviation;    // ||sum K^dag K - I||_max
  double choi_min_eigen;  // minimum eigenvalue of the Choi operator
  bool pass;              // both within 1e-9
};

CptpDiagnostics validate_cptp(const KrausChannel& ch);

HermitianMatrix apply_channel(const KrausChannel& ch, const HermitianMatrix& rho);

ChoiMatrix choi_of(const KrausChannel& ch);

// Eigendecomposition of the Choi; eigenvalues below 1e-10 are pruned.
KrausChannel kraus_from_choi(const ChoiMatrix& j);

// Complementary channel on an environment indexed by the Kraus list:
// N^c(rho)_{ij} = Tr(K_i rho K_j^dag).
KrausChannel complementary_of(const KrausChannel& ch);

// Convex mixture p*u + (1-p)*m of a unitary channel and an arbitrary one.
KrausChannel mix_with_unitary(const KrausChannel& u, const KrausChannel& m, double p);

// Flagged extension p|0><0|_F ⊗ U(rho) + (1-p)|1><1|_F ⊗ M(rho); the flag is
// the leading tensor factor of the output.
KrausChannel flagged_extension(const KrausChannel& u, const KrausChannel& m, double p);

// Composition d after n (first n, then d).
KrausChannel compose(const KrausChannel& d, const KrausChannel& n);

}  // namespace qcap
