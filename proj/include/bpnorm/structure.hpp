#pragma once

#include <cstdint>
#include <string>

#include "bpnorm/bipartite.hpp"
#include "bpnorm/positivity.hpp"
#include "bpnorm/types.hpp"

namespace bpnorm {

// W = sum_ij E_ij (x) E_ji, the swap: W (f (x) g) = g (x) f.
BipartiteOperator make_swap(int n);

// f = (1/sqrt n) sum_i e_i (x) e_i and the density n|f><f|.
Vector max_entangled_vector(int n);
BipartiteOperator make_max_entangled(int n);

BipartiteOperator make_p_tensor_identity(const Matrix& p, int n);

struct UPBReport {
  double max_product_overlap_complement = 0.0;
  double min_product_overlap_p = 0.0;
  bool product_free = false;  // complement subspace contains no simple tensor
  bool simple = false;        // min product overlap >= 1/2
  ProductVectorCertificate complement_certificate;
  ProductVectorCertificate min_certificate;
};

UPBReport analyze_projector(const BipartiteOperator& p, const SeeSawOptions& opt = {});

// Thrown when a projector fails the simplicity bound; carries the violating
// product vector.
class NotSimpleError : public PreconditionError {
public:
  NotSimpleError(const std::string& what, ProductVectorCertificate cert)
      : PreconditionError(what), certificate(std::move(cert)) {}
  ProductVectorCertificate certificate;
};

// s = 2p - I for a simple projector p; throws with the violating product
// vector attached when p is not simple.
BipartiteOperator bp_symmetry_from_projector(const BipartiteOperator& p,
                                             const SeeSawOptions& opt = {});

struct Symmetry2DReport {
  double trace_p = 0.0;
  double trace_q = 0.0;
  Vector negative_eigenvector;          // h with q = |h><h|
  Eigen::VectorXd schmidt_coefficients;
  bool max_entangled = false;           // coefficients (1/sqrt2, 1/sqrt2) within tol
};

// n = 2 only: a symmetry in D has p of rank 3 and q = |h><h| with h maximally
// entangled.
Symmetry2DReport symmetry_structure_2d(const BipartiteOperator& s, double tol = 1e-4,
                                       const MembershipOptions& opt = {});

struct Hybrid3DReport {
  BipartiteOperator sigma;
  std::string variant;  // "rank_one" (printed sum E_ij (x) E_ij) or "swap_type"
  MembershipReport rank_one_membership;
  MembershipReport swap_type_membership;
};

Hybrid3DReport hybrid_3d(const MembershipOptions& opt = {});

struct DecompositionWitness {
  BipartiteOperator a;  // PSD part
  BipartiteOperator b;  // tau_p(b) PSD
  double residual = 0.0;
  int iterations = 0;
  bool found = false;
};

struct DecompositionOptions {
  int max_iterations = 5000;
  double residual_target = 1e-6;
};

// Searches rho = A + B with A >= 0, tau_p(B) >= 0 by Douglas-Rachford
// splitting on the two cone projections; the returned witness is re-verified
// by the residual. Not found within budget is not a proof of
// non-decomposability.
DecompositionWitness decomposable_test(const BipartiteOperator& rho,
                                       const DecompositionOptions& opt = {});

struct InvarianceReport {
  int trials = 0;
  double max_alpha_deviation = 0.0;
  double max_bp_deviation = 0.0;
  bool pi_intervals_overlap = true;
  bool membership_flags_stable = true;
  bool passed = false;
};

struct InvarianceOptions {
  std::uint64_t seed = 0;
  int trials = 20;
  double alpha_tol = 2e-4;
  double bp_tol = 1e-6;
  MembershipOptions membership;
};

// Checks alpha, bp minimum, pi interval and membership flags under random
// local unitary conjugations and under the partial transposition.
InvarianceReport invariance_suite(const BipartiteOperator& sigma,
                                  const InvarianceOptions& opt = {});

}  // namespace bpnorm
