#include "qcap/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qcap {

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix: empty shape");
  if (rows > kMaxDim || cols > kMaxDim)
    throw std::invalid_argument("matrix: dimension exceeds supported maximum of 16");
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, cplx{0.0, 0.0}) {
  check_dims(rows, cols);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  check_dims(rows, cols);
  if (a_.size() != rows * cols) throw std::invalid_argument("matrix: entry count mismatch");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  check_dims(rows_, cols_);
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("matrix: ragged initializer");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = std::conj(at(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m = *this;
  for (auto& z : m.a_) z = std::conj(z);
  return m;
}

cplx ComplexMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : a_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
  for (const auto& z : a_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix add: shape mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sub: shape mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& z : a_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix mul: shape mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a.at(i, k);
      if (aik == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a.at(i, j) - b.at(i, j)));
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a.at(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
    }
  return c;
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("hermitian: matrix not square");
  if (!m_.all_finite()) throw std::invalid_argument("hermitian: non-finite entry");
  if (max_abs_diff(m_, m_.dagger()) > kHermitianTol)
    throw std::invalid_argument("hermitian: ||M - M^dag||_max exceeds 1e-10");
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
  return HermitianMatrix(ComplexMatrix::identity(n));
}

HermitianMatrix HermitianMatrix::zero(std::size_t n) {
  return HermitianMatrix(ComplexMatrix(n, n));
}

HermitianMatrix HermitianMatrix::diag(const std::vector<double>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return HermitianMatrix(std::move(m));
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a.at(i, j));
  return std::sqrt(s);
}

}  // namespace

Spectrum eig_hermitian(const HermitianMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix a = m.mat();
  // Work on the exactly-Hermitian part; the constructor already bounded the
  // deviation at 1e-10.
  for (std::size_t i = 0; i < n; ++i) {
    a.at(i, i) = a.at(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
      a.at(i, j) = v;
      a.at(j, i) = std::conj(v);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  constexpr double kOffTol = 1e-13;
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_diagonal_norm(a) >= kOffTol) {
    if (++sweep > kMaxSweeps)
      throw std::runtime_error("eig_hermitian: Jacobi sweeps failed to converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a.at(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        const cplx phase = apq / r;  // apq = r * e^{i phi}
        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        double t = 1.0 / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        if (tau > 0.0) t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Plane rotation J: J[p][p]=J[q][q]=c, J[p][q]=-s*phase,
        // J[q][p]=s*conj(phase); update A <- J^dag A J, V <- V J.
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a.at(k, p);
          const cplx akq = a.at(k, q);
          a.at(k, p) = c * akp + s * std::conj(phase) * akq;
          a.at(k, q) = -s * phase * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a.at(p, k);
          const cplx aqk = a.at(q, k);
          a.at(p, k) = c * apk + s * phase * aqk;
          a.at(q, k) = -s * std::conj(phase) * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v.at(k, p);
          const cplx vkq = v.at(k, q);
          v.at(k, p) = c * vkp + s * std::conj(phase) * vkq;
          v.at(k, q) = -s * phase * vkp + c * vkq;
        }
        a.at(p, q) = 0.0;
        a.at(q, p) = 0.0;
        a.at(p, p) = a.at(p, p).real();
        a.at(q, q) = a.at(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a.at(x, x).real() > a.at(y, y).real();
  });

  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a.at(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors.at(i, j) = v.at(i, order[j]);
  }
  return out;
}

double entropy_term(double p) {
  if (p <= kEntropyClip) return 0.0;
  return -p * std::log2(p);
}

double von_neumann_entropy(const HermitianMatrix& rho) {
  if (std::abs(rho.trace_real() - 1.0) > 1e-9)
    throw std::invalid_argument("von_neumann_entropy: trace differs from 1 beyond 1e-9");
  const Spectrum s = eig_hermitian(rho);
  double h = 0.0;
  for (double lam : s.eigenvalues) {
    if (lam < kNegativeEigTol)
      throw std::invalid_argument("von_neumann_entropy: eigenvalue below -1e-8, not a state");
    h += entropy_term(lam);
  }
  return h;
}

namespace {

std::vector<std::size_t> decode_index(std::size_t idx, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> out(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = idx % dims[k];
    idx /= dims[k];
  }
  return out;
}

}  // namespace

HermitianMatrix partial_trace(const HermitianMatrix& m,
                              const std::vector<std::size_t>& dims,
                              const std::vector<std::size_t>& keep) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  if (total != m.dim()) throw std::invalid_argument("partial_trace: dims product mismatch");
  std::vector<bool> kept(dims.size(), false);
  std::size_t out_dim = 1;
  for (std::size_t k : keep) {
    if (k >= dims.size() || kept[k]) throw std::invalid_argument("partial_trace: bad keep set");
    kept[k] = true;
    out_dim *= dims[k];
  }
  if (out_dim == 0 || out_dim > kMaxDim) throw std::invalid_argument("partial_trace: bad output dim");

  auto out_index = [&](const std::vector<std::size_t>& full) {
    std::size_t idx = 0;
    for (std::size_t k : keep) idx = idx * dims[k] + full[k];
    return idx;
  };

  ComplexMatrix out(out_dim, out_dim);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    const auto fi = decode_index(i, dims);
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const auto fj = decode_index(j, dims);
      bool diagonal_on_traced = true;
      for (std::size_t k = 0; k < dims.size(); ++k)
        if (!kept[k] && fi[k] != fj[k]) { diagonal_on_traced = false; break; }
      if (diagonal_on_traced) out.at(out_index(fi), out_index(fj)) += m.at(i, j);
    }
  }
  return HermitianMatrix(std::move(out));
}

HermitianMatrix partial_transpose(const HermitianMatrix& m,
                                  const std::vector<std::size_t>& dims,
                                  std::size_t subsystem) {
  if (dims.size() != 2 || subsystem > 1)
    throw std::invalid_argument("partial_transpose: bipartite operators only");
  const std::size_t da = dims[0], db = dims[1];
  if (da * db != m.dim()) throw std::invalid_argument("partial_transpose: dims product mismatch");
  ComplexMatrix out(m.dim(), m.dim());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t a = 0; a < db; ++a)
      for (std::size_t j = 0; j < da; ++j)
        for (std::size_t b = 0; b < db; ++b) {
          const cplx v = m.at(i * db + a, j * db + b);
          if (subsystem == 1)
            out.at(i * db + b, j * db + a) = v;
          else
            out.at(j * db + a, i * db + b) = v;
        }
  return HermitianMatrix(std::move(out));
}

}  // namespace qcap
