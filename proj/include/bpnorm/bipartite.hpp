#pragma once

#include <vector>

#include "bpnorm/types.hpp"

namespace bpnorm {

// f = sum_i g_i u_i (x) v_i with g_i >= 0 descending.
struct SchmidtDecomposition {
  Eigen::VectorXd coefficients;     // descending, nonnegative
  std::vector<Vector> left;         // u_i
  std::vector<Vector> right;        // v_i
  int schmidt_rank = 0;             // # coefficients > kRankThreshold

  static constexpr double kRankThreshold = 1e-9;

  Vector reconstruct() const;
};

// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;      // descending
  Matrix eigenvectors;              // columns match eigenvalues

  Matrix reconstruct() const;
};

struct MatrixNorms {
  double operator_norm = 0.0;  // max singular value
  double trace_norm = 0.0;     // sum of singular values
  double frobenius = 0.0;
};

SchmidtDecomposition schmidt_decompose(const Vector& f);

SpectralDecomposition spectral_decompose(const Matrix& m, double herm_tol = 1e-9);

// factor = 1 traces out the first tensor factor, factor = 2 the second.
Matrix partial_trace(const BipartiteOperator& sigma, int factor);

BipartiteOperator partial_transpose(const BipartiteOperator& sigma);

BipartiteOperator conjugate_local(const BipartiteOperator& sigma,
                                  const Matrix& u1, const Matrix& u2);

MatrixNorms matrix_norms(const Matrix& m);

// A(g) = Tr_2[ sigma (I (x) |g><g|) ], the n x n compression used all over
// the alpha / bp machinery: A(g)(i,j) = sum_{k,l} conj(g_k) sigma_{(i,k),(j,l)} g_l.
Matrix compress_second(const BipartiteOperator& sigma, const Vector& g);

// B(f) = Tr_1[ sigma (|f><f| (x) I) ]: B(f)(k,l) = sum_{i,j} conj(f_i) sigma_{(i,k),(j,l)} f_j.
Matrix compress_first(const BipartiteOperator& sigma, const Vector& f);

double min_eigenvalue(const Matrix& herm);

}  // namespace bpnorm
