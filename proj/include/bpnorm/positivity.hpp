#pragma once

#include <cstdint>
#include <utility>

#include "bpnorm/norms.hpp"
#include "bpnorm/types.hpp"

namespace bpnorm {

struct ProductVectorCertificate {
  Vector f, g;          // unit vectors in H
  double value = 0.0;   // <f (x) g | sigma | f (x) g>
  int restarts = 0;
  int iterations = 0;   // iterations of the best restart
  bool converged = false;
};

struct SeeSawOptions {
  int restarts = 64;
  int max_iterations = 300;
  double value_tol = 1e-12;
  std::uint64_t seed = 0;
};

// min over unit products of <f (x) g|sigma|f (x) g> by alternating minimum
// eigenvectors. Always an upper bound on the true minimum.
ProductVectorCertificate min_product_expectation(const BipartiteOperator& sigma,
                                                 const SeeSawOptions& opt = {});

// max over unit products (see-saw on -sigma, sign flipped back).
ProductVectorCertificate max_product_expectation(const BipartiteOperator& sigma,
                                                 const SeeSawOptions& opt = {});

struct BlockPositivityVerdict {
  bool block_positive = false;
  ProductVectorCertificate certificate;
};

BlockPositivityVerdict is_block_positive(const BipartiteOperator& sigma,
                                         double tol = 1e-6,
                                         const SeeSawOptions& opt = {});

// Jordan split sigma = sigma_plus - sigma_minus from the eigendecomposition;
// both parts PSD, hence bp-positive, and sigma_plus sigma_minus = 0.
std::pair<BipartiteOperator, BipartiteOperator> bp_jordan_split(
    const BipartiteOperator& sigma);

struct MembershipTolerances {
  double hermitian = 1e-12;
  double psd = 1e-8;
  double bp = 1e-6;
  double alpha = 1e-4;
  double trace = 1e-8;
};

struct MembershipReport {
  bool hermitian = false;
  bool psd = false;
  double min_eigenvalue = 0.0;
  bool bp = false;  // one-sided: no violation found by the see-saw
  ProductVectorCertificate bp_certificate;
  AlphaEstimate alpha;
  double trace = 0.0;
  bool in_B1plus = false;
  bool in_D0 = false;
  bool in_D = false;
  bool in_Dplus = false;
  MembershipTolerances tolerances;
};

struct MembershipOptions {
  MembershipTolerances tol;
  SeeSawOptions seesaw;
  AlphaOptions alpha;
};

MembershipReport membership(const BipartiteOperator& sigma,
                            const MembershipOptions& opt = {});

}  // namespace bpnorm
