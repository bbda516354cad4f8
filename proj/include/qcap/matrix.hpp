#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qcap {

using cplx = std::complex<double>;

// Hard cap on matrix dimension; flag ⊗ qubit ⊗ environment spaces for every
// supported channel fit inside it.
inline constexpr std::size_t kMaxDim = 16;

// Hermiticity tolerance: ||M - M^dag||_max must stay below this.
inline constexpr double kHermitianTol = 1e-10;

// Eigenvalues in [-kEntropyClip, kEntropyClip] are treated as exact zeros
// when evaluating entropies.
inline constexpr double kEntropyClip = 1e-12;

// Eigenvalues below this are a CPTP/state violation, not roundoff.
inline constexpr double kNegativeEigTol = -1e-8;

// Dense complex matrix, row-major. Dimensions are capped at kMaxDim.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const cplx& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  ComplexMatrix dagger() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  cplx trace() const;
  double max_abs() const;
  double frobenius_norm() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t rows_, cols_;
  std::vector<cplx> a_;
};

// Max-entry distance ||a - b||_max; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product: (a⊗b)[(i*rb+k),(j*cb+l)] = a[i,j]*b[k,l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Square complex matrix with Hermiticity as a checked construction invariant.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(ComplexMatrix m);

  static HermitianMatrix identity(std::size_t n);
  static HermitianMatrix zero(std::size_t n);
  static HermitianMatrix diag(const std::vector<double>& d);

  std::size_t dim() const { return m_.rows(); }
  const ComplexMatrix& mat() const { return m_; }

  const cplx& at(std::size_t i, std::size_t j) const { return m_.at(i, j); }
  double trace_real() const { return m_.trace().real(); }

 private:
  ComplexMatrix m_;
};

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // columns, unitary
};

// Cyclic complex Jacobi diagonalization. Converges when the off-diagonal
// Frobenius norm drops below 1e-13.
Spectrum eig_hermitian(const HermitianMatrix& m);

// Von Neumann entropy in bits. Requires a density operator: eigenvalues
// >= kNegativeEigTol, trace 1 within 1e-9. Eigenvalues <= kEntropyClip
// contribute nothing.
double von_neumann_entropy(const HermitianMatrix& rho);

// Trace out the subsystems not listed in `keep`. `dims` are the subsystem
// dimensions (their product must equal dim(m)); `keep` is a strictly
// increasing list of subsystem indices retained in their original order.
HermitianMatrix partial_trace(const HermitianMatrix& m,
                              const std::vector<std::size_t>& dims,
                              const std::vector<std::size_t>& keep);

// Partial transpose of a bipartite operator on C^{dims[0]} ⊗ C^{dims[1]};
// `subsystem` selects which factor is transposed.
HermitianMatrix partial_transpose(const HermitianMatrix& m,
                                  const std::vector<std::size_t>& dims,
                                  std::size_t subsystem);

// -x*log2(x) with the clipping rule above; p slightly above 1 is tolerated.
double entropy_term(double p);

}  // namespace qcap
