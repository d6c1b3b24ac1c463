#pragma once

#include <cstdint>
#include <string>

#include "bpnorm/maps.hpp"
#include "bpnorm/types.hpp"

namespace bpnorm {

// Lower-bound witness for alpha: |Tr sigma (s (x) sign*|g><g|)| = value.
struct SymmetryWitness {
  Matrix s;      // Hermitian unitary on H
  Vector g;      // unit vector in H
  int sign = 1;  // +-1 on the rank-one factor
};

struct AlphaOptions {
  int restarts = 32;
  int max_iterations = 500;
  double rel_tol = 1e-10;
  std::uint64_t seed = 0;
};

struct AlphaEstimate {
  double value = 0.0;
  SymmetryWitness witness;
  int restarts = 0;
  int iterations = 0;  // iterations of the best restart
  bool converged = false;
};

struct PiOptions {
  AlphaOptions alpha;  // used to re-certify lower-bound witnesses
};

struct PiEstimate {
  double lower = 0.0;
  double upper = 0.0;
  BipartiteOperator lower_witness;     // density rho with alpha(rho) <= 1
  std::string lower_witness_desc;
  double lower_witness_alpha = 0.0;    // certified alpha of the witness
  std::string upper_certificate;
  int upper_terms = 0;

  double gap() const { return upper - lower; }
};

// alpha(sigma) = max_{||g||=1} || Tr_2[sigma (I (x) |g><g|)] ||_1, the collapsed
// form of the symmetry x rank-one maximization. Alternating maximization:
// fix g -> s = sign(A(g)); fix s -> g = top eigenvector of B(s).
AlphaEstimate alpha_norm(const BipartiteOperator& sigma, const AlphaOptions& opt = {});

// One estimate per restart, in restart order; used to probe maximizer
// multiplicity (smoothness tests).
std::vector<AlphaEstimate> alpha_norm_restarts(const BipartiteOperator& sigma,
                                               const AlphaOptions& opt = {});

// Closed form alpha(P) = ||Tr_1 P|| for orthogonal projectors (A(g) is PSD,
// so its trace norm collapses to <g|Tr_1 P|g>).
double alpha_of_projector(const BipartiteOperator& p, double tol = 1e-9);

// Re-evaluates |Tr sigma (s (x) sign |g><g|)|.
double evaluate_alpha_witness(const BipartiteOperator& sigma, const SymmetryWitness& w);

PiEstimate pi_upper(const BipartiteOperator& u);

PiEstimate pi_lower(const BipartiteOperator& u, const PiOptions& opt = {});

// Two-sided interval: max of the lower-bound witnesses, min of the upper
// certificates; lower <= upper up to optimizer tolerance.
PiEstimate pi_interval(const BipartiteOperator& u, const PiOptions& opt = {});

// <u, phi> = sum_{ijkl} u_{(i,k),(j,l)} [phi(E_ij)]_{k,l}, the bilinear form
// sum_i Tr(phi(a_i) b_i^t) for any decomposition u = sum a_i (x) b_i.
Complex pairing(const BipartiteOperator& u, const LinearMapRepr& phi);

}  // namespace bpnorm
