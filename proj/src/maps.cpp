#include "bpnorm/maps.hpp"

#include <cmath>

#include "bpnorm/norms.hpp"
#include "bpnorm/positivity.hpp"

namespace bpnorm {

Matrix LinearMapRepr::apply(const Matrix& a) const {
  Matrix out = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out += a(i, j) * images[i][j];
  return out;
}

bool LinearMapRepr::hermiticity_preserving(double tol) const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((images[i][j].adjoint() - images[j][i]).cwiseAbs().maxCoeff() > tol)
        return false;
  return true;
}

// Tr(rho E_ij (x) E_kl) = Tr(phi(E_ij) E_kl^t) pins one entry per equation:
// rho_{(a,b),(c,d)} = phi(E_ca)_{d,b}.
BipartiteOperator density_from_map(const LinearMapRepr& phi) {
  const int n = phi.n;
  Matrix rho(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          rho(composite(a, b, n), composite(c, d, n)) = phi.images[c][a](d, b);
  return BipartiteOperator(n, std::move(rho));
}

LinearMapRepr map_from_density(const BipartiteOperator& rho) {
  const int n = rho.n;
  LinearMapRepr phi(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          phi.images[i][j](k, l) = rho.at(j, l, i, k);
  return phi;
}

double pairing_residual(const LinearMapRepr& phi, const BipartiteOperator& rho) {
  const int n = phi.n;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          // Tr(rho E_ij (x) E_kl) = rho_{(j,l),(i,k)}
          Complex lhs = rho.at(j, l, i, k);
          Complex rhs = phi.images[i][j](k, l);  // Tr(phi(E_ij) E_lk)
          worst = std::max(worst, std::abs(lhs - rhs));
        }
  return worst;
}

MapDensityPair make_pair(const LinearMapRepr& phi) {
  MapDensityPair out;
  out.map = phi;
  out.density = density_from_map(phi);
  out.pairing_residual = pairing_residual(phi, out.density);
  return out;
}

UnitalityReport is_unital(const LinearMapRepr& phi, double tol) {
  const int n = phi.n;
  Matrix phi_id = phi.apply(Matrix::Identity(n, n));
  UnitalityReport out;
  Eigen::JacobiSVD<Matrix> svd(phi_id - Matrix::Identity(n, n));
  out.identity_deviation =
      svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
  out.unital = out.identity_deviation <= tol;
  out.density_trace = density_from_map(phi).mat.trace().real();
  return out;
}

LinearMapRepr identity_map(int n) {
  LinearMapRepr phi(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) phi.images[i][j](i, j) = 1.0;
  return phi;
}

LinearMapRepr transpose_map(int n) {
  LinearMapRepr phi(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) phi.images[i][j](j, i) = 1.0;
  return phi;
}

LinearMapRepr conjugation_map(const Matrix& u) {
  if (!is_unitary(u)) throw PreconditionError("conjugation_map: U must be unitary");
  const int n = static_cast<int>(u.rows());
  LinearMapRepr phi(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      phi.images[i][j] = u.adjoint().col(i) * u.row(j);  // U^* E_ij U
  return phi;
}

LinearMapRepr co_conjugation_map(const Matrix& u) {
  if (!is_unitary(u)) throw PreconditionError("co_conjugation_map: U must be unitary");
  const int n = static_cast<int>(u.rows());
  LinearMapRepr phi = conjugation_map(u);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) phi.images[i][j] = phi.images[i][j].transpose().eval();
  return phi;
}

LinearMapRepr state_to_identity_map(const Vector& h) {
  if (std::abs(h.norm() - 1.0) > 1e-10)
    throw PreconditionError("state_to_identity_map: h must be a unit vector");
  const int n = static_cast<int>(h.size());
  LinearMapRepr phi(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      phi.images[i][j] = std::conj(h(i)) * h(j) * Matrix::Identity(n, n);
  return phi;
}

LinearMapRepr kraus_map(const std::vector<Matrix>& kraus) {
  if (kraus.empty()) throw PreconditionError("kraus_map: empty Kraus list");
  const int n = static_cast<int>(kraus[0].rows());
  LinearMapRepr phi(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix e = Matrix::Zero(n, n);
      e(i, j) = 1.0;
      Matrix acc = Matrix::Zero(n, n);
      for (const auto& k : kraus) acc += k.adjoint() * e * k;
      phi.images[i][j] = acc;
    }
  return phi;
}

// transpose after the Kraus map: a -> (sum K^* a K)^t
LinearMapRepr co_kraus_map(const std::vector<Matrix>& kraus) {
  LinearMapRepr phi = kraus_map(kraus);
  const int n = phi.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) phi.images[i][j] = phi.images[i][j].transpose().eval();
  return phi;
}

LinearMapRepr convex_combination(const std::vector<double>& weights,
                                 const std::vector<LinearMapRepr>& maps) {
  if (weights.size() != maps.size() || maps.empty())
    throw PreconditionError("convex_combination: weights/maps size mismatch");
  double sum = 0.0;
  for (double w : weights) {
    if (w < -1e-12) throw PreconditionError("convex_combination: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw PreconditionError("convex_combination: weights must sum to 1");
  const int n = maps[0].n;
  LinearMapRepr out(n);
  for (size_t m = 0; m < maps.size(); ++m) {
    if (maps[m].n != n) throw PreconditionError("convex_combination: dimension mismatch");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.images[i][j] += weights[m] * maps[m].images[i][j];
  }
  return out;
}

LinearMapRepr scale_map(const LinearMapRepr& phi, double factor) {
  LinearMapRepr out = phi;
  for (auto& row : out.images)
    for (auto& m : row) m *= factor;
  return out;
}

double map_norm(const LinearMapRepr& phi) {
  return alpha_norm(density_from_map(phi)).value;
}

PositiveMapVerdict is_positive_map(const LinearMapRepr& phi, double tol) {
  if (!phi.hermiticity_preserving())
    throw PreconditionError("is_positive_map: map is not Hermiticity-preserving");
  auto verdict = is_block_positive(density_from_map(phi), tol);
  PositiveMapVerdict out;
  out.positive = verdict.block_positive;
  out.witness_value = verdict.certificate.value;
  out.witness_f = verdict.certificate.f;
  out.witness_g = verdict.certificate.g;
  return out;
}

}  // namespace bpnorm
