#include "bpnorm/structure.hpp"

#include <cmath>

#include "bpnorm/rng.hpp"

namespace bpnorm {

BipartiteOperator make_swap(int n) {
  if (n < 2) throw PreconditionError("make_swap: n >= 2 required");
  Matrix w = Matrix::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      w(composite(i, j, n), composite(j, i, n)) = 1.0;  // E_ij (x) E_ji
  return BipartiteOperator(n, std::move(w));
}

Vector max_entangled_vector(int n) {
  Vector f = Vector::Zero(n * n);
  for (int i = 0; i < n; ++i) f(composite(i, i, n)) = 1.0 / std::sqrt(double(n));
  return f;
}

BipartiteOperator make_max_entangled(int n) {
  if (n < 2) throw PreconditionError("make_max_entangled: n >= 2 required");
  Vector f = max_entangled_vector(n);
  return BipartiteOperator(n, double(n) * f * f.adjoint());
}

BipartiteOperator make_p_tensor_identity(const Matrix& p, int n) {
  if (!is_projector(p) || std::abs(p.trace().real() - 1.0) > 1e-9)
    throw PreconditionError("make_p_tensor_identity: p must be a rank-1 projector");
  return tensor_op(p, Matrix::Identity(n, n));
}

UPBReport analyze_projector(const BipartiteOperator& p, const SeeSawOptions& opt) {
  if (!is_projector(p.mat))
    throw PreconditionError("analyze_projector: input is not an orthogonal projector");
  UPBReport rep;
  BipartiteOperator complement(p.n, Matrix(Matrix::Identity(p.dim(), p.dim()) - p.mat));
  rep.complement_certificate = max_product_expectation(complement, opt);
  rep.max_product_overlap_complement = rep.complement_certificate.value;
  rep.min_certificate = min_product_expectation(p, opt);
  rep.min_product_overlap_p = rep.min_certificate.value;
  rep.product_free = rep.max_product_overlap_complement < 1.0 - 1e-6;
  rep.simple = rep.min_product_overlap_p >= 0.5 - 1e-6;
  return rep;
}

BipartiteOperator bp_symmetry_from_projector(const BipartiteOperator& p,
                                             const SeeSawOptions& opt) {
  UPBReport rep = analyze_projector(p, opt);
  if (!rep.simple)
    throw NotSimpleError("bp_symmetry_from_projector: projector is not simple",
                         rep.min_certificate);
  return BipartiteOperator(
      p.n, Matrix(2.0 * p.mat - Matrix::Identity(p.dim(), p.dim())));
}

Symmetry2DReport symmetry_structure_2d(const BipartiteOperator& s, double tol,
                                       const MembershipOptions& opt) {
  if (s.n != 2) throw PreconditionError("symmetry_structure_2d: n = 2 required");
  if (!is_symmetry(s.mat))
    throw PreconditionError("symmetry_structure_2d: input is not a symmetry");
  MembershipReport mem = membership(s, opt);
  if (!mem.in_D)
    throw PreconditionError("symmetry_structure_2d: symmetry is not in D");

  Eigen::SelfAdjointEigenSolver<Matrix> es(s.mat);
  Symmetry2DReport rep;
  int negatives = 0;
  Eigen::Index neg_index = 0;
  for (Eigen::Index i = 0; i < 4; ++i) {
    if (es.eigenvalues()(i) < 0) {
      ++negatives;
      neg_index = i;
      rep.trace_q += 1.0;
    } else {
      rep.trace_p += 1.0;
    }
  }
  if (negatives != 1)
    throw PreconditionError("symmetry_structure_2d: q is not rank one");
  rep.negative_eigenvector = es.eigenvectors().col(neg_index);
  auto sd = schmidt_decompose(rep.negative_eigenvector);
  rep.schmidt_coefficients = sd.coefficients;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  rep.max_entangled = (sd.coefficients.size() == 2) &&
                      std::abs(sd.coefficients(0) - inv_sqrt2) <= tol &&
                      std::abs(sd.coefficients(1) - inv_sqrt2) <= tol;
  return rep;
}

Hybrid3DReport hybrid_3d(const MembershipOptions& opt) {
  const int n = 3;
  Vector x0 = Vector::Zero(9);
  x0(composite(0, 0, n)) = 1.0 / std::sqrt(2.0);
  x0(composite(1, 0, n)) = 1.0 / std::sqrt(2.0);
  Matrix px = x0 * x0.adjoint();

  // Variant as printed: W0 = sum_{i,j=2..3} E_ij (x) E_ij = 2|h><h|
  Matrix w_rank_one = Matrix::Zero(9, 9);
  // Swap-type reading: W0 = sum_{i,j=2..3} E_ij (x) E_ji, a partial symmetry
  Matrix w_swap = Matrix::Zero(9, 9);
  for (int i = 1; i < 3; ++i)
    for (int j = 1; j < 3; ++j) {
      w_rank_one(composite(i, i, n), composite(j, j, n)) += 1.0;
      w_swap(composite(i, j, n), composite(j, i, n)) += 1.0;
    }

  BipartiteOperator rank_one(n, Matrix(px + w_rank_one));
  BipartiteOperator swap_type(n, Matrix(px + w_swap));

  Hybrid3DReport rep{swap_type, "", membership(rank_one, opt), membership(swap_type, opt)};
  if (rep.swap_type_membership.in_D) {
    rep.sigma = swap_type;
    rep.variant = "swap_type";
  } else if (rep.rank_one_membership.in_D) {
    rep.sigma = rank_one;
    rep.variant = "rank_one";
  } else {
    throw PreconditionError("hybrid_3d: neither W0 reading passes membership in D");
  }
  return rep;
}

namespace {

Matrix clip_psd(const Matrix& herm) {
  Eigen::SelfAdjointEigenSolver<Matrix> es((herm + herm.adjoint()) / 2.0);
  Matrix out = Matrix::Zero(herm.rows(), herm.cols());
  for (Eigen::Index i = 0; i < herm.rows(); ++i) {
    double lam = es.eigenvalues()(i);
    if (lam > 0)
      out += lam * es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  }
  return out;
}

}  // namespace

DecompositionWitness decomposable_test(const BipartiteOperator& rho,
                                       const DecompositionOptions& opt) {
  const int n = rho.n;
  const Eigen::Index d = rho.dim();
  DecompositionWitness w;
  w.a = BipartiteOperator(n, Matrix::Zero(d, d));
  w.b = BipartiteOperator(n, Matrix::Zero(d, d));

  if (min_eigenvalue(rho.mat) >= -1e-10) {  // already PSD
    w.a = rho;
    w.residual = 0.0;
    w.found = true;
    return w;
  }
  BipartiteOperator tp = partial_transpose(rho);
  if (min_eigenvalue(tp.mat) >= -1e-10) {
    w.b = rho;
    w.residual = 0.0;
    w.found = true;
    return w;
  }

  // Douglas-Rachford splitting on C1 = {A >= 0} and C2 = {A : tau_p(rho - A)
  // >= 0}: x' = x + P2(2 P1(x) - x) - P1(x), with the feasible candidate taken
  // from the shadow sequence P1(x). Converges linearly even when the two sets
  // meet tangentially, where plain alternating projections stall.
  Matrix x = rho.mat / 2.0;
  auto project_c2 = [&](const Matrix& y) {
    BipartiteOperator diff(n, Matrix(rho.mat - y));
    Matrix clipped = clip_psd(partial_transpose(diff).mat);
    return Matrix(rho.mat -
                  partial_transpose(BipartiteOperator(n, std::move(clipped))).mat);
  };

  for (int it = 1; it <= opt.max_iterations; ++it) {
    Matrix p1 = clip_psd(x);
    Matrix refl = 2.0 * p1 - x;
    x = x + project_c2(refl) - p1;
    w.iterations = it;

    Matrix a_cert = clip_psd(x);
    BipartiteOperator rem(n, Matrix(rho.mat - a_cert));
    Matrix b_cert =
        partial_transpose(
            BipartiteOperator(n, clip_psd(partial_transpose(rem).mat)))
            .mat;
    double residual = (rho.mat - a_cert - b_cert).norm();
    if (residual <= opt.residual_target) {
      w.a = BipartiteOperator(n, std::move(a_cert));
      w.b = BipartiteOperator(n, std::move(b_cert));
      w.residual = residual;
      w.found = true;
      return w;
    }
    if (it == opt.max_iterations) {
      w.a = BipartiteOperator(n, std::move(a_cert));
      w.b = BipartiteOperator(n, std::move(b_cert));
      w.residual = residual;
    }
  }
  w.found = false;
  return w;
}

InvarianceReport invariance_suite(const BipartiteOperator& sigma,
                                  const InvarianceOptions& opt) {
  if (!sigma.hermitian(1e-9))
    throw PreconditionError("invariance_suite: input must be Hermitian");
  InvarianceReport rep;
  rep.trials = opt.trials;

  MembershipReport base = membership(sigma, opt.membership);
  PiEstimate base_pi = pi_interval(sigma, PiOptions{opt.membership.alpha});

  auto check_transformed = [&](const BipartiteOperator& t) {
    MembershipReport m = membership(t, opt.membership);
    rep.max_alpha_deviation =
        std::max(rep.max_alpha_deviation, std::abs(m.alpha.value - base.alpha.value));
    rep.max_bp_deviation =
        std::max(rep.max_bp_deviation,
                 std::abs(m.bp_certificate.value - base.bp_certificate.value));
    if (m.bp != base.bp || m.in_B1plus != base.in_B1plus || m.in_D0 != base.in_D0 ||
        m.in_D != base.in_D)
      rep.membership_flags_stable = false;
    PiEstimate pi = pi_interval(t, PiOptions{opt.membership.alpha});
    double tol = opt.alpha_tol;
    if (pi.lower > base_pi.upper + tol || base_pi.lower > pi.upper + tol)
      rep.pi_intervals_overlap = false;
  };

  for (int t = 0; t < opt.trials; ++t) {
    auto gen = substream(opt.seed, static_cast<std::uint64_t>(t));
    Matrix u1 = random_unitary(sigma.n, gen);
    Matrix u2 = random_unitary(sigma.n, gen);
    check_transformed(conjugate_local(sigma, u1, u2));
  }
  check_transformed(partial_transpose(sigma));

  rep.passed = rep.max_alpha_deviation <= opt.alpha_tol &&
               rep.max_bp_deviation <= opt.bp_tol && rep.pi_intervals_overlap &&
               rep.membership_flags_stable;
  return rep;
}

}  // namespace bpnorm
