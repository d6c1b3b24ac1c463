#include "bpnorm/norms.hpp"

#include <cmath>

#include "bpnorm/bipartite.hpp"
#include "bpnorm/rng.hpp"
#include "bpnorm/structure.hpp"

namespace bpnorm {

namespace {

// sign(A) on the spectral decomposition; zero eigenvalues get +1 so the
// result stays a symmetry.
Matrix sign_of(const Matrix& herm, Eigen::VectorXd* abs_sum = nullptr) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
  Matrix s = Matrix::Zero(herm.rows(), herm.cols());
  for (Eigen::Index i = 0; i < herm.rows(); ++i) {
    double sgn = es.eigenvalues()(i) < 0.0 ? -1.0 : 1.0;
    s += sgn * es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  }
  if (abs_sum) *abs_sum = es.eigenvalues().cwiseAbs();
  return s;
}

// B(s)(k,l) = sum_{ij} s(j,i) sigma_{(i,k),(j,l)}; <g|B(s)|g> = Tr(A(g) s).
Matrix symmetry_compression(const BipartiteOperator& sigma, const Matrix& s) {
  const int n = sigma.n;
  Matrix out = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      Complex acc(0, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) acc += s(j, i) * sigma.at(i, k, j, l);
      out(k, l) = acc;
    }
  return (out + out.adjoint()) / 2.0;
}

Vector top_eigenvector(const Matrix& herm) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
  return es.eigenvectors().col(herm.rows() - 1);
}

double trace_norm_of(const Matrix& herm) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

}  // namespace

namespace {

AlphaEstimate alpha_restart(const BipartiteOperator& sigma, Vector g,
                            const AlphaOptions& opt) {
  AlphaEstimate est;
  double value = trace_norm_of(compress_second(sigma, g));
  int it = 0;
  bool conv = false;
  for (; it < opt.max_iterations; ++it) {
    Matrix a = compress_second(sigma, g);
    Matrix s = sign_of(a);
    g = top_eigenvector(symmetry_compression(sigma, s));
    double next = trace_norm_of(compress_second(sigma, g));
    if (next - value <= opt.rel_tol * std::max(1.0, std::abs(next))) {
      value = std::max(value, next);
      conv = true;
      break;
    }
    value = next;
  }
  est.value = value;
  est.iterations = it + 1;
  est.converged = conv;
  est.witness.s = sign_of(compress_second(sigma, g));
  est.witness.g = g;
  est.witness.sign = 1;
  return est;
}

Vector restart_start(int n, int r, std::uint64_t seed) {
  if (r == 0) {
    Vector g = Vector::Zero(n);
    g(0) = 1.0;
    return g;
  }
  if (r == 1) return Vector::Constant(n, Complex(1.0 / std::sqrt(double(n)), 0.0));
  auto gen = substream(seed, static_cast<std::uint64_t>(r));
  return random_unit_vector(n, gen);
}

}  // namespace

std::vector<AlphaEstimate> alpha_norm_restarts(const BipartiteOperator& sigma,
                                               const AlphaOptions& opt) {
  if (!sigma.hermitian(1e-9))
    throw PreconditionError("alpha_norm: input must be Hermitian");
  std::vector<AlphaEstimate> out;
  out.reserve(opt.restarts);
  for (int r = 0; r < opt.restarts; ++r)
    out.push_back(alpha_restart(sigma, restart_start(sigma.n, r, opt.seed), opt));
  return out;
}

AlphaEstimate alpha_norm(const BipartiteOperator& sigma, const AlphaOptions& opt) {
  auto runs = alpha_norm_restarts(sigma, opt);
  AlphaEstimate best;
  best.value = -1.0;
  for (const auto& est : runs)
    if (est.value > best.value) best = est;
  best.restarts = opt.restarts;
  if (best.value < 0.0) best.value = 0.0;
  return best;
}

double evaluate_alpha_witness(const BipartiteOperator& sigma, const SymmetryWitness& w) {
  Matrix a = compress_second(sigma, w.g);
  Complex tr = (a * w.s).trace();
  return std::abs(static_cast<double>(w.sign) * tr.real());
}

// For PSD sigma the compression A(g) is PSD, so ||A(g)||_1 = Tr A(g) =
// <g|Tr_1 sigma|g> and the maximum over unit g is the operator norm of the
// partial trace over the *first* factor.
double alpha_of_projector(const BipartiteOperator& p, double tol) {
  if (!is_projector(p.mat, tol))
    throw PreconditionError("alpha_of_projector: input is not an orthogonal projector");
  return matrix_norms(partial_trace(p, 1)).operator_norm;
}

Complex pairing(const BipartiteOperator& u, const LinearMapRepr& phi) {
  if (u.n != phi.n) throw PreconditionError("pairing: dimension mismatch");
  const int n = u.n;
  Complex acc(0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) acc += u.at(i, k, j, l) * phi.images[i][j](k, l);
  return acc;
}

PiEstimate pi_upper(const BipartiteOperator& u) {
  const int n = u.n;
  PiEstimate out;

  // Operator Schmidt decomposition via the realignment
  // R_{(i,j),(k,l)} = u_{(i,k),(j,l)}.
  Matrix r(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          r(composite(i, j, n), composite(k, l, n)) = u.at(i, k, j, l);

  Eigen::JacobiSVD<Matrix> svd(r, Eigen::ComputeThinU | Eigen::ComputeThinV);
  double cost = 0.0;
  int terms = 0;
  for (int t = 0; t < n * n; ++t) {
    double s = svd.singularValues()(t);
    if (s <= 1e-13) continue;
    Matrix a(n, n), b(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        a(i, j) = svd.matrixU()(composite(i, j, n), t);
        b(i, j) = std::conj(svd.matrixV()(composite(i, j, n), t));
      }
    cost += s * matrix_norms(a).operator_norm * matrix_norms(b).trace_norm;
    ++terms;
  }
  out.upper = cost;
  out.upper_terms = terms;
  out.upper_certificate = "operator Schmidt decomposition (realignment SVD)";

  // Rank-one PSD inputs additionally get the Schmidt construction
  // a_ij = |u_i><u_j|, b_ij = g_i g_j |v_i><v_j| with cost lambda (sum g_i)^2.
  if (u.hermitian(1e-10)) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(u.mat);
    const Eigen::Index d = u.dim();
    double lam = es.eigenvalues()(d - 1);
    double rest = 0.0;
    for (Eigen::Index i = 0; i + 1 < d; ++i) rest += std::abs(es.eigenvalues()(i));
    if (lam > 0.0 && rest <= 1e-10 * lam) {
      auto sd = schmidt_decompose(es.eigenvectors().col(d - 1));
      double schmidt_cost = lam * std::pow(sd.coefficients.sum(), 2.0);
      if (schmidt_cost < out.upper) {
        out.upper = schmidt_cost;
        out.upper_terms = sd.schmidt_rank * sd.schmidt_rank;
        out.upper_certificate = "rank-one Schmidt decomposition, cost (sum g_i)^2";
      }
    }
  }
  return out;
}

PiEstimate pi_lower(const BipartiteOperator& u, const PiOptions& opt) {
  const int n = u.n;
  struct Candidate {
    std::string desc;
    BipartiteOperator rho;
  };
  std::vector<Candidate> candidates;
  candidates.push_back({"swap", make_swap(n)});
  candidates.push_back({"max entangled density", make_max_entangled(n)});
  Matrix p1 = Matrix::Zero(n, n);
  p1(0, 0) = 1.0;
  candidates.push_back({"p (x) I", make_p_tensor_identity(p1, n)});
  candidates.push_back(
      {"I (x) I / n", BipartiteOperator(n, Matrix::Identity(n * n, n * n) / double(n))});

  // Locally rotated maximally entangled witnesses aligned with the Schmidt
  // bases of extreme eigenvectors of u; for u = |f><f| this attains
  // (sum g_i)^2 >= 1.
  if (u.hermitian(1e-9)) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(u.mat);
    const Eigen::Index d = u.dim();
    for (Eigen::Index which : {d - 1, Eigen::Index(0)}) {
      Vector f = es.eigenvectors().col(which);
      if (std::abs(es.eigenvalues()(which)) < 1e-13) continue;
      auto sd = schmidt_decompose(f);
      Vector w = Vector::Zero(d);
      for (int i = 0; i < n; ++i) w += kron_vec(sd.left[i], sd.right[i]);
      w /= std::sqrt(double(n));
      Matrix rho = double(n) * w * w.adjoint();
      candidates.push_back({"Schmidt-aligned rotated max entangled", BipartiteOperator(n, rho)});
      if (d == 1) break;
    }
  }

  PiEstimate out;
  out.lower = 0.0;
  out.lower_witness_desc = "zero";
  out.lower_witness = BipartiteOperator(n, Matrix::Zero(n * n, n * n));
  for (const auto& c : candidates) {
    double t = std::abs((c.rho.mat * u.mat).trace());
    if (t <= out.lower) continue;
    double cert = alpha_norm(c.rho, opt.alpha).value;
    double bound = cert > 1.0 + 1e-6 ? t / cert : t;
    if (bound > out.lower) {
      out.lower = bound;
      out.lower_witness = c.rho;
      out.lower_witness_desc = c.desc;
      out.lower_witness_alpha = cert;
    }
  }
  return out;
}

PiEstimate pi_interval(const BipartiteOperator& u, const PiOptions& opt) {
  PiEstimate lo = pi_lower(u, opt);
  PiEstimate up = pi_upper(u);
  PiEstimate out = lo;
  out.upper = up.upper;
  out.upper_terms = up.upper_terms;
  out.upper_certificate = up.upper_certificate;
  return out;
}

}  // namespace bpnorm
