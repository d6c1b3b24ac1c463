#include "bpnorm/bipartite.hpp"

#include <cmath>

namespace bpnorm {

Vector SchmidtDecomposition::reconstruct() const {
  const int nl = static_cast<int>(left.empty() ? 0 : left[0].size());
  const int nr = static_cast<int>(right.empty() ? 0 : right[0].size());
  Vector f = Vector::Zero(nl * nr);
  for (size_t i = 0; i < left.size(); ++i)
    f += coefficients(static_cast<Eigen::Index>(i)) * kron_vec(left[i], right[i]);
  return f;
}

Matrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
         eigenvectors.adjoint();
}

SchmidtDecomposition schmidt_decompose(const Vector& f) {
  const int dim = static_cast<int>(f.size());
  const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(dim))));
  if (n * n != dim)
    throw PreconditionError("schmidt_decompose: dimension is not a perfect square");
  if (std::abs(f.norm() - 1.0) > 1e-10)
    throw PreconditionError("schmidt_decompose: input vector is not normalized");

  // Coefficient matrix C(i,k) = f[i*n + k]; f = sum_j s_j u_j (x) conj(V col j).
  Matrix c(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) c(i, k) = f(composite(i, k, n));

  Eigen::JacobiSVD<Matrix> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SchmidtDecomposition out;
  out.coefficients = svd.singularValues();
  out.left.reserve(n);
  out.right.reserve(n);
  for (int j = 0; j < n; ++j) {
    out.left.push_back(svd.matrixU().col(j));
    out.right.push_back(svd.matrixV().col(j).conjugate());
  }
  out.schmidt_rank = 0;
  for (int j = 0; j < n; ++j)
    if (out.coefficients(j) > SchmidtDecomposition::kRankThreshold) ++out.schmidt_rank;
  return out;
}

SpectralDecomposition spectral_decompose(const Matrix& m, double herm_tol) {
  if (!is_hermitian(m, herm_tol))
    throw PreconditionError("spectral_decompose: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  const Eigen::Index d = m.rows();
  SpectralDecomposition out;
  out.eigenvalues.resize(d);
  out.eigenvectors.resize(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {  // Eigen is ascending; flip
    out.eigenvalues(j) = es.eigenvalues()(d - 1 - j);
    out.eigenvectors.col(j) = es.eigenvectors().col(d - 1 - j);
  }
  return out;
}

Matrix partial_trace(const BipartiteOperator& sigma, int factor) {
  const int n = sigma.n;
  Matrix out = Matrix::Zero(n, n);
  if (factor == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) out(i, j) += sigma.at(i, k, j, k);
  } else if (factor == 1) {
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i) out(k, l) += sigma.at(i, k, i, l);
  } else {
    throw PreconditionError("partial_trace: factor must be 1 or 2");
  }
  return out;
}

BipartiteOperator partial_transpose(const BipartiteOperator& sigma) {
  const int n = sigma.n;
  Matrix out(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
          out(composite(i, k, n), composite(j, l, n)) = sigma.at(i, l, j, k);
  return BipartiteOperator(n, std::move(out));
}

BipartiteOperator conjugate_local(const BipartiteOperator& sigma,
                                  const Matrix& u1, const Matrix& u2) {
  if (!is_unitary(u1) || !is_unitary(u2))
    throw PreconditionError("conjugate_local: conjugators must be unitary");
  if (u1.rows() != sigma.n || u2.rows() != sigma.n)
    throw PreconditionError("conjugate_local: dimension mismatch");
  Matrix u = kron(u1, u2);
  return BipartiteOperator(sigma.n, u * sigma.mat * u.adjoint());
}

MatrixNorms matrix_norms(const Matrix& m) {
  if (!is_finite(m)) throw PreconditionError("matrix_norms: non-finite entries");
  Eigen::JacobiSVD<Matrix> svd(m);
  MatrixNorms out;
  const auto& sv = svd.singularValues();
  out.operator_norm = sv.size() > 0 ? sv(0) : 0.0;
  out.trace_norm = sv.sum();
  out.frobenius = m.norm();
  return out;
}

Matrix compress_second(const BipartiteOperator& sigma, const Vector& g) {
  const int n = sigma.n;
  Matrix out = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex acc(0, 0);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          acc += std::conj(g(k)) * sigma.at(i, k, j, l) * g(l);
      out(i, j) = acc;
    }
  return out;
}

Matrix compress_first(const BipartiteOperator& sigma, const Vector& f) {
  const int n = sigma.n;
  Matrix out = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      Complex acc(0, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          acc += std::conj(f(i)) * sigma.at(i, k, j, l) * f(j);
      out(k, l) = acc;
    }
  return out;
}

double min_eigenvalue(const Matrix& herm) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace bpnorm
