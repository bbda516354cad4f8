#pragma once

#include "qcap/channel.hpp"

namespace qcap {

// Depolarizing zero-capacity threshold reported in the source analyses.
// The parameter convention (iso vs Pauli) is unresolved there; treat as an
// approximate reference constant, not a computed value.
inline constexpr double kDepolarizingZeroCapacityThreshold = 0.259;

// A CPTP map from a channel's output space to its environment together with
// the Choi-level residual it achieves.
struct DegradingMap {
  KrausChannel map;
  double residual;
};

// Residual between choi(compose(d, n)) and choi(complementary_of(n)).
// Equal environment bases are compared directly; otherwise the environments
// are aligned through the eigenbases of the two Choi operators' environment
// marginals, and a spectral mismatch beyond 1e-9 is itself reported as the
// residual. A value <= 1e-9 certifies the pair.
double verify_degrading(const KrausChannel& n, const KrausChannel& candidate);

inline double verify_degrading(const KrausChannel& n, const DegradingMap& d) {
  return verify_degrading(n, d.map);
}

// Degrader for amplitude damping: AD(delta) with delta = (1-2g)/(1-g).
// Throws for gamma > 1/2 (anti-degradable regime, no degrader exists).
DegradingMap ad_degrader(double gamma);

// Degrader for the flagged extension p U + (1-p) M given a verified degrader
// for M: block-diagonal in the flag, with a constant map on the unitary
// branch and delta_m on the noise branch.
DegradingMap flagged_degrader(const KrausChannel& u, const KrausChannel& m,
                              const DegradingMap& delta_m, double p);

// PPT check on the Choi operator (transpose on the output factor). For
// qubit-to-qubit channels PPT of the Choi is equivalent to the channel being
// entanglement-breaking.
bool eb_check_ppt(const KrausChannel& ch);

}  // namespace qcap
