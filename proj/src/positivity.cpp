#include "bpnorm/positivity.hpp"

#include <cmath>
#include <limits>

#include "bpnorm/bipartite.hpp"
#include "bpnorm/rng.hpp"

namespace bpnorm {

namespace {

Vector min_eigenvector(const Matrix& herm) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
  return es.eigenvectors().col(0);
}

double product_expectation(const BipartiteOperator& sigma, const Vector& f,
                           const Vector& g) {
  Vector fg = kron_vec(f, g);
  return (fg.adjoint() * sigma.mat * fg)(0).real();
}

// Deterministic tie-break for the restart merge: lexicographic on the
// phase-fixed certificate entries.
Vector canonical_phase(const Vector& v) {
  Eigen::Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  Complex z = v(imax);
  double a = std::abs(z);
  return a > 0 ? Vector(v * (std::conj(z) / a)) : v;
}

bool lex_less(const Vector& a, const Vector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
    if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
  }
  return false;
}

}  // namespace

ProductVectorCertificate min_product_expectation(const BipartiteOperator& sigma,
                                                 const SeeSawOptions& opt) {
  if (!sigma.hermitian(1e-9))
    throw PreconditionError("min_product_expectation: input must be Hermitian");
  const int n = sigma.n;

  ProductVectorCertificate best;
  best.value = std::numeric_limits<double>::infinity();
  best.restarts = opt.restarts;

  for (int r = 0; r < opt.restarts; ++r) {
    auto gen = substream(opt.seed, static_cast<std::uint64_t>(r));
    Vector f = random_unit_vector(n, gen);
    Vector g = random_unit_vector(n, gen);

    double value = product_expectation(sigma, f, g);
    int it = 0;
    bool conv = false;
    for (; it < opt.max_iterations; ++it) {
      f = min_eigenvector(compress_second(sigma, g));
      g = min_eigenvector(compress_first(sigma, f));
      double next = product_expectation(sigma, f, g);
      if (value - next < opt.value_tol) {
        value = std::min(value, next);
        conv = true;
        break;
      }
      value = next;
    }
    Vector cf = canonical_phase(f), cg = canonical_phase(g);
    bool better = value < best.value - 1e-15;
    bool tie = std::abs(value - best.value) <= 1e-15;
    if (better || (tie && best.f.size() > 0 && lex_less(cf, canonical_phase(best.f)))) {
      best.value = std::min(value, best.value);
      best.f = cf;
      best.g = cg;
      best.iterations = it + 1;
      best.converged = conv;
    }
  }
  return best;
}

ProductVectorCertificate max_product_expectation(const BipartiteOperator& sigma,
                                                 const SeeSawOptions& opt) {
  BipartiteOperator neg(sigma.n, Matrix(-sigma.mat));
  ProductVectorCertificate c = min_product_expectation(neg, opt);
  c.value = -c.value;
  return c;
}

BlockPositivityVerdict is_block_positive(const BipartiteOperator& sigma, double tol,
                                         const SeeSawOptions& opt) {
  BlockPositivityVerdict out;
  out.certificate = min_product_expectation(sigma, opt);
  out.block_positive = out.certificate.value >= -tol;
  return out;
}

std::pair<BipartiteOperator, BipartiteOperator> bp_jordan_split(
    const BipartiteOperator& sigma) {
  if (!sigma.hermitian(1e-9))
    throw PreconditionError("bp_jordan_split: input must be Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(sigma.mat);
  Matrix plus = Matrix::Zero(sigma.dim(), sigma.dim());
  Matrix minus = Matrix::Zero(sigma.dim(), sigma.dim());
  for (Eigen::Index i = 0; i < sigma.dim(); ++i) {
    double lam = es.eigenvalues()(i);
    Matrix proj = es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
    if (lam >= 0)
      plus += lam * proj;
    else
      minus += -lam * proj;
  }
  return {BipartiteOperator(sigma.n, std::move(plus)),
          BipartiteOperator(sigma.n, std::move(minus))};
}

MembershipReport membership(const BipartiteOperator& sigma, const MembershipOptions& opt) {
  MembershipReport rep;
  rep.tolerances = opt.tol;
  rep.hermitian = sigma.hermitian(opt.tol.hermitian);
  rep.trace = sigma.mat.trace().real();

  if (!rep.hermitian) return rep;

  rep.min_eigenvalue = min_eigenvalue(sigma.mat);
  rep.psd = rep.min_eigenvalue >= -opt.tol.psd;

  auto bp = is_block_positive(sigma, opt.tol.bp, opt.seesaw);
  rep.bp = bp.block_positive;
  rep.bp_certificate = bp.certificate;

  rep.alpha = alpha_norm(sigma, opt.alpha);

  const double a = rep.alpha.value;
  const double n = sigma.n;
  rep.in_B1plus = rep.bp && a <= 1.0 + opt.tol.alpha;
  rep.in_D0 = rep.in_B1plus && std::abs(a - 1.0) <= opt.tol.alpha;
  rep.in_D = rep.in_D0 && std::abs(rep.trace - n) <= opt.tol.trace;
  rep.in_Dplus = rep.in_D && rep.psd;
  return rep;
}

}  // namespace bpnorm
