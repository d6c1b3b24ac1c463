#pragma once

#include <cstdint>
#include <random>

#include "bpnorm/types.hpp"

namespace bpnorm {

// Counter-based substreams: sample k of a run with seed s always sees the same
// bits regardless of evaluation order, so parallel restarts stay reproducible.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t counter) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ counter));
}

inline Vector random_unit_vector(int dim, std::mt19937_64& gen) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(nd(gen), nd(gen));
  double nrm = v.norm();
  if (nrm == 0.0) { v(0) = 1.0; nrm = 1.0; }
  return v / nrm;
}

inline Matrix random_gaussian_matrix(int rows, int cols, std::mt19937_64& gen) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(nd(gen), nd(gen));
  return m;
}

// Haar-distributed via QR of a Ginibre matrix, phases fixed from the R diagonal.
inline Matrix random_unitary(int n, std::mt19937_64& gen) {
  Matrix g = random_gaussian_matrix(n, n, gen);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    Complex d = r(j, j);
    double a = std::abs(d);
    q.col(j) *= (a > 0 ? d / a : Complex(1, 0));
  }
  return q;
}

inline Matrix random_hermitian(int n, std::mt19937_64& gen) {
  Matrix g = random_gaussian_matrix(n, n, gen);
  return (g + g.adjoint()) / 2.0;
}

// Random isometry C^n -> C^(m*n): stack of m Kraus blocks K_i with
// sum K_i^* K_i = I.
inline Matrix random_isometry(int n, int m, std::mt19937_64& gen) {
  Matrix g = random_gaussian_matrix(m * n, n, gen);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = Matrix(qr.householderQ()).leftCols(n);
  return q;
}

}  // namespace bpnorm
