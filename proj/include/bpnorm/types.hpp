#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace bpnorm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Thrown when an operation's preconditions are violated (non-Hermitian input,
// dimension mismatch, non-unitary conjugator, ...).
class PreconditionError : public std::invalid_argument {
public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

inline bool is_finite(const Matrix& m) {
  return m.allFinite();
}

inline bool is_hermitian(const Matrix& m, double tol = 1e-12) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

inline bool is_unitary(const Matrix& u, double tol = 1e-10) {
  if (u.rows() != u.cols()) return false;
  Matrix d = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff() <= tol;
}

// s = s*, s^2 = I
inline bool is_symmetry(const Matrix& s, double tol = 1e-9) {
  if (!is_hermitian(s, tol)) return false;
  Matrix d = s * s - Matrix::Identity(s.rows(), s.cols());
  return d.cwiseAbs().maxCoeff() <= tol;
}

inline bool is_projector(const Matrix& p, double tol = 1e-9) {
  if (!is_hermitian(p, tol)) return false;
  return (p * p - p).cwiseAbs().maxCoeff() <= tol;
}

// Operator on H (x) H with dim H = n. Composite index convention: the basis
// vector e_i (x) e_k of the first/second factor sits at row r = i*n + k.
struct BipartiteOperator {
  int n = 0;
  Matrix mat;  // n^2 x n^2, row-major indexing through composite()

  BipartiteOperator() = default;
  BipartiteOperator(int n_, Matrix m) : n(n_), mat(std::move(m)) {
    if (n < 1 || mat.rows() != n * n || mat.cols() != n * n)
      throw PreconditionError("BipartiteOperator: matrix must be n^2 x n^2");
    if (!is_finite(mat))
      throw PreconditionError("BipartiteOperator: non-finite entries");
  }

  int dim() const { return n * n; }

  Complex& at(int i, int k, int j, int l) { return mat(i * n + k, j * n + l); }
  Complex at(int i, int k, int j, int l) const { return mat(i * n + k, j * n + l); }

  bool hermitian(double tol = 1e-12) const { return is_hermitian(mat, tol); }

  // (i,j) block sigma^(i,j): the n x n matrix with entries sigma_{(i,k),(j,l)}
  Matrix block(int i, int j) const { return mat.block(i * n, j * n, n, n); }
};

inline int composite(int i, int k, int n) { return i * n + k; }

// Kronecker product with the first factor major, matching composite().
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Vector kron_vec(const Vector& f, const Vector& g) {
  Vector out(f.size() * g.size());
  for (Eigen::Index i = 0; i < f.size(); ++i)
    out.segment(i * g.size(), g.size()) = f(i) * g;
  return out;
}

inline BipartiteOperator tensor_op(const Matrix& a, const Matrix& b) {
  return BipartiteOperator(static_cast<int>(a.rows()), kron(a, b));
}

}  // namespace bpnorm
