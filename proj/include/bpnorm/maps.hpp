#pragma once

#include <vector>

#include "bpnorm/types.hpp"

namespace bpnorm {

// A linear map phi: B(H) -> B(H), stored extensionally by its images on the
// matrix units, images[i][j] = phi(E_ij).
struct LinearMapRepr {
  int n = 0;
  std::vector<std::vector<Matrix>> images;

  LinearMapRepr() = default;
  explicit LinearMapRepr(int n_)
      : n(n_), images(n_, std::vector<Matrix>(n_, Matrix::Zero(n_, n_))) {}

  Matrix apply(const Matrix& a) const;

  // phi(E_ij)^* = phi(E_ji)
  bool hermiticity_preserving(double tol = 1e-10) const;
};

struct MapDensityPair {
  LinearMapRepr map;
  BipartiteOperator density;
  double pairing_residual = 0.0;  // max deviation over matrix-unit pairings
};

// The unique rho_phi with Tr(rho (a (x) b)) = Tr(phi(a) b^t) on all matrix units.
BipartiteOperator density_from_map(const LinearMapRepr& phi);

LinearMapRepr map_from_density(const BipartiteOperator& rho);

MapDensityPair make_pair(const LinearMapRepr& phi);

double pairing_residual(const LinearMapRepr& phi, const BipartiteOperator& rho);

struct UnitalityReport {
  bool unital = false;
  double identity_deviation = 0.0;  // ||phi(I) - I||
  double density_trace = 0.0;       // Tr rho_phi (real part)
};

UnitalityReport is_unital(const LinearMapRepr& phi, double tol = 1e-8);

// Canonical map catalog.
LinearMapRepr identity_map(int n);
LinearMapRepr transpose_map(int n);
LinearMapRepr conjugation_map(const Matrix& u);              // a -> U^* a U
LinearMapRepr co_conjugation_map(const Matrix& u);           // transpose after conjugation
LinearMapRepr state_to_identity_map(const Vector& h);        // a -> (h, a h) I
LinearMapRepr kraus_map(const std::vector<Matrix>& kraus);   // a -> sum K^* a K
LinearMapRepr co_kraus_map(const std::vector<Matrix>& kraus);
LinearMapRepr convex_combination(const std::vector<double>& weights,
                                 const std::vector<LinearMapRepr>& maps);
LinearMapRepr scale_map(const LinearMapRepr& phi, double factor);

// alpha(rho_phi); for positive maps cross-checked against ||phi(I)|| by callers.
double map_norm(const LinearMapRepr& phi);

struct PositiveMapVerdict {
  bool positive = false;
  double witness_value = 0.0;  // min product expectation of rho_phi
  Vector witness_f, witness_g;
};

PositiveMapVerdict is_positive_map(const LinearMapRepr& phi, double tol = 1e-6);

}  // namespace bpnorm
