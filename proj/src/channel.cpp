#include "qcap/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qcap {

namespace {

constexpr double kTpTol = 1e-9;

ComplexMatrix sum_kdag_k(const std::vector<ComplexMatrix>& kraus) {
  ComplexMatrix s(kraus.front().cols(), kraus.front().cols());
  for (const auto& k : kraus) s += k.dagger() * k;
  return s;
}

void require_param(double v, double lo, double hi, const char* name) {
  if (!(v >= lo && v <= hi))
    throw std::invalid_argument(std::string("channel spec: parameter '") + name + "' out of range");
}

double get_param(const ChannelSpec& spec, const std::string& name) {
  auto it = spec.params.find(name);
  if (it == spec.params.end())
    throw std::invalid_argument("channel spec: missing parameter '" + name + "'");
  return it->second;
}

const ComplexMatrix& pauli(std::size_t axis) {
  static const ComplexMatrix x{{0.0, 1.0}, {1.0, 0.0}};
  static const ComplexMatrix y{{0.0, cplx{0.0, -1.0}}, {cplx{0.0, 1.0}, 0.0}};
  static const ComplexMatrix z{{1.0, 0.0}, {0.0, -1.0}};
  switch (axis) {
    case 0: return x;
    case 1: return y;
    default: return z;
  }
}

bool is_unitary_single_kraus(const KrausChannel& u) {
  if (u.kraus().size() != 1 || u.d_in() != u.d_out()) return false;
  const ComplexMatrix& k = u.kraus().front();
  return max_abs_diff(k.dagger() * k, ComplexMatrix::identity(u.d_in())) <= kTpTol;
}

}  // namespace

KrausChannel::KrausChannel(std::size_t d_in, std::size_t d_out, std::vector<ComplexMatrix> kraus,
                           std::string label) {
  *this = unchecked(d_in, d_out, std::move(kraus), std::move(label));
  const double dev = max_abs_diff(sum_kdag_k(kraus_), ComplexMatrix::identity(d_in_));
  if (dev > kTpTol)
    throw std::invalid_argument("kraus channel: trace preservation violated (deviation " +
                                std::to_string(dev) + ")");
}

KrausChannel KrausChannel::unchecked(std::size_t d_in, std::size_t d_out,
                                     std::vector<ComplexMatrix> kraus, std::string label) {
  if (kraus.empty()) throw std::invalid_argument("kraus channel: empty Kraus list");
  if (d_in == 0 || d_out == 0 || d_in > kMaxDim || d_out > kMaxDim)
    throw std::invalid_argument("kraus channel: unsupported dimensions");
  for (const auto& k : kraus) {
    if (k.rows() != d_out || k.cols() != d_in)
      throw std::invalid_argument("kraus channel: operator shape mismatch");
    if (!k.all_finite()) throw std::invalid_argument("kraus channel: non-finite entry");
  }
  KrausChannel ch;
  ch.d_in_ = d_in;
  ch.d_out_ = d_out;
  ch.kraus_ = std::move(kraus);
  ch.label_ = std::move(label);
  return ch;
}

ChoiMatrix::ChoiMatrix(std::size_t din, std::size_t dout, HermitianMatrix m)
    : d_in(din), d_out(dout), matrix(std::move(m)) {
  if (d_in * d_out != matrix.dim()) throw std::invalid_argument("choi: dims product mismatch");
  const Spectrum s = eig_hermitian(matrix);
  if (s.eigenvalues.back() < -1e-9) throw std::invalid_argument("choi: not positive semidefinite");
  HermitianMatrix marg = partial_trace(matrix, {d_in, d_out}, {0});
  if (max_abs_diff(marg.mat(), ComplexMatrix::identity(d_in)) > 1e-9)
    throw std::invalid_argument("choi: Tr_out(J) differs from identity");
}

KrausChannel amplitude_damping_channel(double gamma) {
  require_param(gamma, 0.0, 1.0, "gamma");
  ComplexMatrix e0{{1.0, 0.0}, {0.0, std::sqrt(1.0 - gamma)}};
  ComplexMatrix e1{{0.0, std::sqrt(gamma)}, {0.0, 0.0}};
  return KrausChannel(2, 2, {e0, e1}, "amplitude_damping(gamma=" + std::to_string(gamma) + ")");
}

KrausChannel gadc_channel(double gamma, double nth) {
  require_param(gamma, 0.0, 1.0, "gamma");
  require_param(nth, 0.0, 1.0, "nth");
  const double a = std::sqrt(1.0 - nth), b = std::sqrt(nth);
  const double c = std::sqrt(1.0 - gamma), d = std::sqrt(gamma);
  ComplexMatrix k1{{a, 0.0}, {0.0, a * c}};
  ComplexMatrix k2{{0.0, a * d}, {0.0, 0.0}};
  ComplexMatrix k3{{b * c, 0.0}, {0.0, b}};
  ComplexMatrix k4{{0.0, 0.0}, {b * d, 0.0}};
  return KrausChannel(2, 2, {k1, k2, k3, k4},
                      "gadc(gamma=" + std::to_string(gamma) + ",nth=" + std::to_string(nth) + ")");
}

KrausChannel pauli_channel(double px, double py, double pz) {
  if (px < 0.0 || py < 0.0 || pz < 0.0 || px + py + pz > 1.0 + 1e-12)
    throw std::invalid_argument("channel spec: pauli probabilities out of range");
  const double pi = std::max(0.0, 1.0 - px - py - pz);
  std::vector<ComplexMatrix> ks;
  ks.push_back(std::sqrt(pi) * ComplexMatrix::identity(2));
  ks.push_back(std::sqrt(px) * pauli(0));
  ks.push_back(std::sqrt(py) * pauli(1));
  ks.push_back(std::sqrt(pz) * pauli(2));
  return KrausChannel(2, 2, std::move(ks), "pauli");
}

KrausChannel depolarizing_iso_channel(double p) {
  require_param(p, 0.0, 1.0, "p");
  KrausChannel ch = pauli_channel(p / 4.0, p / 4.0, p / 4.0);
  return KrausChannel(2, 2, ch.kraus(), "depolarizing_iso(p=" + std::to_string(p) + ")");
}

KrausChannel depolarizing_pauli_channel(double p) {
  require_param(p, 0.0, 1.0, "p");
  KrausChannel ch = pauli_channel(p / 3.0, p / 3.0, p / 3.0);
  return KrausChannel(2, 2, ch.kraus(), "depolarizing_pauli(p=" + std::to_string(p) + ")");
}

KrausChannel rotation_unitary_channel(std::size_t axis, double theta) {
  if (axis > 2) throw std::invalid_argument("channel spec: rotation axis must be 0, 1 or 2");
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  ComplexMatrix u = c * ComplexMatrix::identity(2) + cplx{0.0, -s} * pauli(axis);
  return KrausChannel(2, 2, {u}, "unitary(axis=" + std::to_string(axis) + ")");
}

KrausChannel identity_channel(std::size_t dim) {
  return KrausChannel(dim, dim, {ComplexMatrix::identity(dim)}, "identity");
}

KrausChannel build_channel(const ChannelSpec& spec) {
  switch (spec.kind) {
    case ChannelKind::amplitude_damping:
      return amplitude_damping_channel(get_param(spec, "gamma"));
    case ChannelKind::gadc:
      return gadc_channel(get_param(spec, "gamma"), get_param(spec, "nth"));
    case ChannelKind::depolarizing_iso:
      return depolarizing_iso_channel(get_param(spec, "p"));
    case ChannelKind::depolarizing_pauli:
      return depolarizing_pauli_channel(get_param(spec, "p"));
    case ChannelKind::pauli:
      return pauli_channel(get_param(spec, "px"), get_param(spec, "py"), get_param(spec, "pz"));
    case ChannelKind::unitary: {
      const double axis = get_param(spec, "axis");
      if (axis != 0.0 && axis != 1.0 && axis != 2.0)
        throw std::invalid_argument("channel spec: rotation axis must be 0, 1 or 2");
      return rotation_unitary_channel(static_cast<std::size_t>(axis), get_param(spec, "theta"));
    }
    case ChannelKind::custom: {
      if (!spec.custom_kraus || spec.custom_kraus->empty())
        throw std::invalid_argument("channel spec: custom kind requires custom_kraus");
      const auto& ks = *spec.custom_kraus;
      return KrausChannel(ks.front().cols(), ks.front().rows(), ks, "custom");
    }
  }
  throw std::invalid_argument("channel spec: unknown kind");
}

CptpDiagnostics validate_cptp(const KrausChannel& ch) {
  CptpDiagnostics d{};
  d.tp_deviation = max_abs_diff(sum_kdag_k(ch.kraus()), ComplexMatrix::identity(ch.d_in()));

  // Choi positivity check without the ChoiMatrix invariants (they would throw
  // on the very violations being diagnosed).
  ComplexMatrix j(ch.d_in() * ch.d_out(), ch.d_in() * ch.d_out());
  for (const auto& k : ch.kraus()) {
    ComplexMatrix w(ch.d_in() * ch.d_out(), 1);
    for (std::size_t i = 0; i < ch.d_in(); ++i)
      for (std::size_t a = 0; a < ch.d_out(); ++a) w.at(i * ch.d_out() + a, 0) = k.at(a, i);
    j += w * w.dagger();
  }
  const Spectrum s = eig_hermitian(HermitianMatrix(j));
  d.choi_min_eigen = s.eigenvalues.back();
  d.pass = d.tp_deviation <= kTpTol && d.choi_min_eigen >= -kTpTol;
  return d;
}

HermitianMatrix apply_channel(const KrausChannel& ch, const HermitianMatrix& rho) {
  if (rho.dim() != ch.d_in()) throw std::invalid_argument("apply_channel: dimension mismatch");
  ComplexMatrix out(ch.d_out(), ch.d_out());
  for (const auto& k : ch.kraus()) out += k * rho.mat() * k.dagger();
  return HermitianMatrix(std::move(out));
}

ChoiMatrix choi_of(const KrausChannel& ch) {
  const std::size_t n = ch.d_in() * ch.d_out();
  ComplexMatrix j(n, n);
  for (const auto& k : ch.kraus()) {
    // w = (I ⊗ K)|Omega>, Omega the unnormalized maximally entangled vector.
    ComplexMatrix w(n, 1);
    for (std::size_t i = 0; i < ch.d_in(); ++i)
      for (std::size_t a = 0; a < ch.d_out(); ++a) w.at(i * ch.d_out() + a, 0) = k.at(a, i);
    j += w * w.dagger();
  }
  return ChoiMatrix(ch.d_in(), ch.d_out(), HermitianMatrix(std::move(j)));
}

KrausChannel kraus_from_choi(const ChoiMatrix& j) {
  const Spectrum s = eig_hermitian(j.matrix);
  std::vector<ComplexMatrix> ks;
  for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
    if (s.eigenvalues[k] <= 1e-10) continue;
    const double w = std::sqrt(s.eigenvalues[k]);
    ComplexMatrix op(j.d_out, j.d_in);
    for (std::size_t i = 0; i < j.d_in; ++i)
      for (std::size_t a = 0; a < j.d_out; ++a) op.at(a, i) = w * s.eigenvectors.at(i * j.d_out + a, k);
    ks.push_back(std::move(op));
  }
  if (ks.empty()) throw std::invalid_argument("kraus_from_choi: Choi operator has no support");
  return KrausChannel(j.d_in, j.d_out, std::move(ks), "from_choi");
}

KrausChannel complementary_of(const KrausChannel& ch) {
  const std::size_t env = ch.kraus().size();
  if (env > kMaxDim)
    throw std::invalid_argument("complementary_of: environment dimension exceeds 16");
  std::vector<ComplexMatrix> ls;
  ls.reserve(ch.d_out());
  // (L_k)_{i,m} = (K_i)_{k,m}: one operator per output row.
  for (std::size_t k = 0; k < ch.d_out(); ++k) {
    ComplexMatrix l(env, ch.d_in());
    for (std::size_t i = 0; i < env; ++i)
      for (std::size_t m = 0; m < ch.d_in(); ++m) l.at(i, m) = ch.kraus()[i].at(k, m);
    ls.push_back(std::move(l));
  }
  return KrausChannel(ch.d_in(), env, std::move(ls), ch.label() + "^c");
}

KrausChannel mix_with_unitary(const KrausChannel& u, const KrausChannel& m, double p) {
  if (!is_unitary_single_kraus(u))
    throw std::invalid_argument("mix_with_unitary: first channel must be a single unitary Kraus");
  if (u.d_in() != m.d_in() || u.d_out() != m.d_out())
    throw std::invalid_argument("mix_with_unitary: dimension mismatch");
  require_param(p, 0.0, 1.0, "p");
  std::vector<ComplexMatrix> ks;
  ks.push_back(std::sqrt(p) * u.kraus().front());
  for (const auto& k : m.kraus()) ks.push_back(std::sqrt(1.0 - p) * k);
  return KrausChannel(m.d_in(), m.d_out(), std::move(ks), "mixture");
}

KrausChannel flagged_extension(const KrausChannel& u, const KrausChannel& m, double p) {
  if (!is_unitary_single_kraus(u))
    throw std::invalid_argument("flagged_extension: first channel must be a single unitary Kraus");
  if (u.d_in() != m.d_in() || u.d_out() != m.d_out())
    throw std::invalid_argument("flagged_extension: dimension mismatch");
  require_param(p, 0.0, 1.0, "p");
  ComplexMatrix flag0(2, 1), flag1(2, 1);
  flag0.at(0, 0) = 1.0;
  flag1.at(1, 0) = 1.0;
  std::vector<ComplexMatrix> ks;
  ks.push_back(std::sqrt(p) * kron(flag0, u.kraus().front()));
  for (const auto& k : m.kraus()) ks.push_back(std::sqrt(1.0 - p) * kron(flag1, k));
  return KrausChannel(m.d_in(), 2 * m.d_out(), std::move(ks), "flagged");
}

KrausChannel compose(const KrausChannel& d, const KrausChannel& n) {
  if (d.d_in() != n.d_out()) throw std::invalid_argument("compose: dimension mismatch");
  if (d.kraus().size() * n.kraus().size() > 64)
    throw std::invalid_argument("compose: Kraus product too large");
  std::vector<ComplexMatrix> ks;
  for (const auto& a : d.kraus())
    for (const auto& b : n.kraus()) ks.push_back(a * b);
  return KrausChannel(n.d_in(), d.d_out(), std::move(ks), "composed");
}

}  // namespace qcap
