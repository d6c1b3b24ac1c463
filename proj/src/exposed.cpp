#include "bpnorm/exposed.hpp"

#include <cmath>

#include "bpnorm/bipartite.hpp"
#include "bpnorm/maps.hpp"
#include "bpnorm/rng.hpp"
#include "bpnorm/structure.hpp"

namespace bpnorm {

ExposureWitness positivize_witness(const BipartiteOperator& a, double c) {
  if (!a.hermitian(1e-9))
    throw PreconditionError("positivize_witness: witness must be Hermitian");
  const int n = a.n;
  Matrix shifted = a.mat + (c / double(n)) * Matrix::Identity(a.dim(), a.dim());
  if (min_eigenvalue(shifted) < -1e-10)
    throw PreconditionError("positivize_witness: shift constant too small, result not PSD");
  ExposureWitness w;
  w.a = BipartiteOperator(n, std::move(shifted));
  w.shift = c;
  w.separable = false;
  return w;
}

BipartiteOperator sample_D(int n, std::uint64_t seed, std::uint64_t counter,
                           const SampleDOptions& opt) {
  auto gen = substream(seed, counter);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double weight = uni(gen);

  auto slice_kraus = [&](const Matrix& iso) {
    std::vector<Matrix> blocks;
    for (int m = 0; m < opt.kraus_terms; ++m)
      blocks.push_back(iso.block(m * n, 0, n, n));
    return blocks;
  };
  LinearMapRepr cp = kraus_map(slice_kraus(random_isometry(n, opt.kraus_terms, gen)));
  LinearMapRepr cocp = co_kraus_map(slice_kraus(random_isometry(n, opt.kraus_terms, gen)));
  LinearMapRepr phi = convex_combination({weight, 1.0 - weight}, {cp, cocp});
  return density_from_map(phi);
}

namespace {

void consider_sample(const BipartiteOperator& rho0, const ExposureWitness& a,
                     const BipartiteOperator& sigma, double base, double tol,
                     ExposureReport& rep) {
  if ((sigma.mat - rho0.mat).norm() <= tol) return;
  double gap = base - (a.a.mat * sigma.mat).trace().real();
  if (rep.samples == 0 || gap < rep.min_gap) {
    rep.min_gap = gap;
    if (gap <= 0.0) rep.counterexample = sigma;
  }
  ++rep.samples;
}

}  // namespace

ExposureReport check_exposure(const BipartiteOperator& rho0, const ExposureWitness& a,
                              int samples, std::uint64_t seed,
                              const ExposureOptions& opt) {
  if (min_eigenvalue(a.a.mat) < -1e-10)
    throw PreconditionError("check_exposure: witness must be PSD");
  MembershipReport mem = membership(rho0, opt.sampler.membership);
  if (!mem.in_D)
    throw PreconditionError("check_exposure: candidate does not pass membership in D");

  const int n = rho0.n;
  ExposureReport rep;
  rep.candidate = rho0;
  rep.witness = a;
  rep.seed = seed;
  rep.sampler =
      "random unital positive maps from conv(CP, co-CP) + local rotations of the "
      "candidate + catalog mixtures; non-decomposable region (n >= 3) not covered";

  const double base = (a.a.mat * rho0.mat).trace().real();

  for (int k = 0; k < samples; ++k)
    consider_sample(rho0, a, sample_D(n, seed, static_cast<std::uint64_t>(k), opt.sampler),
                    base, opt.distinctness_tol, rep);

  // Targeted perturbations: local rotations of rho0.
  for (int k = 0; k < 16; ++k) {
    auto gen = substream(seed ^ 0x726f74ULL, static_cast<std::uint64_t>(k));
    double scale = (k % 4 + 1) * 0.05;  // small and larger rotations
    auto unitary_exp = [](const Matrix& h) {  // exp(iH) for Hermitian H
      Eigen::SelfAdjointEigenSolver<Matrix> es(h);
      Matrix u = Matrix::Zero(h.rows(), h.cols());
      for (Eigen::Index i = 0; i < h.rows(); ++i)
        u += std::exp(Complex(0, es.eigenvalues()(i))) * es.eigenvectors().col(i) *
             es.eigenvectors().col(i).adjoint();
      return u;
    };
    Matrix u1 = unitary_exp(scale * random_hermitian(n, gen));
    Matrix u2 = unitary_exp(scale * random_hermitian(n, gen));
    consider_sample(rho0, a, conjugate_local(rho0, u1, u2), base, opt.distinctness_tol,
                    rep);
  }

  // Catalog points and mixtures with the candidate (includes segment endpoints).
  std::vector<BipartiteOperator> catalog;
  catalog.push_back(make_swap(n));
  catalog.push_back(make_max_entangled(n));
  Matrix p1 = Matrix::Zero(n, n);
  p1(0, 0) = 1.0;
  catalog.push_back(make_p_tensor_identity(p1, n));
  for (const auto& c : catalog) {
    consider_sample(rho0, a, c, base, opt.distinctness_tol, rep);
    for (double lam : {0.25, 0.5, 0.75}) {
      BipartiteOperator mix(n, Matrix(lam * rho0.mat + (1.0 - lam) * c.mat));
      consider_sample(rho0, a, mix, base, opt.distinctness_tol, rep);
    }
  }

  rep.supported = rep.samples > 0 && rep.min_gap > 0.0;
  return rep;
}

ExposureReport symmetry_exposure_check(const BipartiteOperator& a, int samples,
                                       std::uint64_t seed, const ExposureOptions& opt) {
  if (!is_symmetry(a.mat))
    throw PreconditionError("symmetry_exposure_check: input is not a symmetry");
  const int n = a.n;
  double self = (a.mat * a.mat).trace().real();
  if (std::abs(self - double(n * n)) > 1e-9)
    throw PreconditionError("symmetry_exposure_check: Tr(a a) != n^2");
  double lam_min = min_eigenvalue(a.mat);
  double c = std::max(0.0, -double(n) * lam_min) + 1.0;
  return check_exposure(a, positivize_witness(a, c), samples, seed, opt);
}

ExposureReport projection_exposure_check(const BipartiteOperator& p,
                                         const BipartiteOperator& rho0, int samples,
                                         std::uint64_t seed, const ExposureOptions& opt) {
  if (!is_projector(p.mat))
    throw PreconditionError("projection_exposure_check: witness is not a projector");
  bool self_test = (p.mat - rho0.mat).norm() <= 1e-12;
  if (!self_test) {
    // rho0 = p - q must be an e-symmetry with p rho0 = p
    Matrix sq = rho0.mat * rho0.mat;
    if (!is_projector(BipartiteOperator(rho0.n, (sq + sq.adjoint()) / 2.0).mat))
      throw PreconditionError("projection_exposure_check: rho0 is not an e-symmetry");
    if ((p.mat * rho0.mat - p.mat).cwiseAbs().maxCoeff() > 1e-9)
      throw PreconditionError("projection_exposure_check: p rho0 != p");
  }
  ExposureWitness w;
  w.a = p;
  w.shift = 0.0;
  return check_exposure(rho0, w, samples, seed, opt);
}

RotundReport rotund_test(const BipartiteOperator& x,
                         const std::vector<BipartiteOperator>& directions,
                         const AlphaOptions& opt) {
  double ax = alpha_norm(x, opt).value;
  if (std::abs(ax - 1.0) > 2e-4)
    throw PreconditionError("rotund_test: x is not alpha-unit");
  const double ts[3] = {1e-2, 1e-3, 1e-4};

  RotundReport rep;
  rep.rotund = true;
  for (const auto& y : directions) {
    double ay = alpha_norm(y, opt).value;
    if (ay <= 0.0) throw PreconditionError("rotund_test: zero direction");
    RotundDirectionResult res;
    res.rotund_along = true;
    for (int i = 0; i < 3; ++i) {
      BipartiteOperator z(x.n, Matrix(x.mat + ts[i] * (y.mat / ay)));
      double q = (alpha_norm(z, opt).value - ax) / ts[i];
      res.quotients[i] = q;
      if (q >= 1.0 - 1e-3) res.rotund_along = false;
    }
    if (!res.rotund_along) rep.rotund = false;
    rep.directions.push_back(res);
  }
  return rep;
}

SmoothReport smooth_test(const BipartiteOperator& x, const AlphaOptions& opt) {
  double ax = alpha_norm(x, opt).value;
  if (std::abs(ax - 1.0) > 2e-4)
    throw PreconditionError("smooth_test: x is not alpha-unit");

  auto runs = alpha_norm_restarts(x, opt);
  double best = 0.0;
  for (const auto& r : runs) best = std::max(best, r.value);

  // Canonicalize the phase of g (largest-magnitude entry real positive) and
  // cluster witness functionals s (x) sign |g><g| by pairing distance.
  SmoothReport rep;
  std::vector<Matrix> functionals;
  for (const auto& r : runs) {
    if (r.value < best - 1e-6) continue;
    Vector g = r.witness.g;
    Eigen::Index imax = 0;
    g.cwiseAbs().maxCoeff(&imax);
    Complex z = g(imax);
    if (std::abs(z) > 0) g *= std::conj(z) / std::abs(z);
    Matrix fun = double(r.witness.sign) * kron(r.witness.s, Matrix(g * g.adjoint()));
    bool fresh = true;
    for (size_t c = 0; c < functionals.size(); ++c)
      if ((functionals[c] - fun).norm() <= 1e-3) {
        fresh = false;
        break;
      }
    if (fresh) {
      functionals.push_back(fun);
      rep.representatives.push_back(r.witness);
    }
  }
  rep.clusters = static_cast<int>(functionals.size());
  rep.smooth = rep.clusters == 1;
  return rep;
}

SectionReport trace_section(const BipartiteOperator& x, const BipartiteOperator& y,
                            const SectionOptions& opt) {
  if ((x.mat - y.mat).norm() <= 1e-9)
    throw PreconditionError("trace_section: degenerate span, y = x");
  double ax = alpha_norm(x, opt.alpha).value;
  double ay = alpha_norm(y, opt.alpha).value;
  if (std::abs(ax - 1.0) > 2e-4 || std::abs(ay - 1.0) > 2e-4)
    throw PreconditionError("trace_section: operands must be alpha-unit");

  auto radius = [&](double theta) {
    BipartiteOperator z(x.n,
                        Matrix(std::cos(theta) * x.mat + std::sin(theta) * y.mat));
    double a = alpha_norm(z, opt.alpha).value;
    if (a <= 0.0) throw PreconditionError("trace_section: alpha vanished on the span");
    return 1.0 / a;
  };

  SectionReport rep;
  const double two_pi = 2.0 * M_PI;
  for (int k = 0; k < opt.resolution; ++k) {
    double theta = two_pi * k / opt.resolution;
    rep.angles.push_back(theta);
    rep.radii.push_back(radius(theta));
  }

  // One-sided tangent directions at x = (1, 0) in span coordinates; a smooth
  // boundary has them anti-parallel.
  const double delta = 1e-3;
  auto tangent_angle = [&](double theta) {
    double r = radius(theta);
    double xi = r * std::cos(theta) - 1.0;
    double eta = r * std::sin(theta);
    return std::atan2(eta, xi);
  };
  rep.right_slope = tangent_angle(delta);
  rep.left_slope = tangent_angle(-delta);
  double diff = std::abs(rep.right_slope - (rep.left_slope + M_PI));
  while (diff > M_PI) diff = std::abs(diff - two_pi);
  rep.corner = diff > opt.corner_tol;
  return rep;
}

StrongNonSmoothReport strong_nonsmooth_test(const BipartiteOperator& x,
                                            const std::vector<BipartiteOperator>& partners,
                                            const SectionOptions& opt) {
  StrongNonSmoothReport rep;
  rep.strongly_non_smooth = !partners.empty();
  for (const auto& y : partners) {
    rep.sections.push_back(trace_section(x, y, opt));
    if (!rep.sections.back().corner) rep.strongly_non_smooth = false;
  }
  return rep;
}

BipartiteOperator scale_Dn(const BipartiteOperator& rho, ScaleDirection dir) {
  const double n = rho.n;
  double tr = rho.mat.trace().real();
  if (dir == ScaleDirection::ToD) {
    if (std::abs(tr - 1.0) > 1e-6)
      throw PreconditionError("scale_Dn: D_(n) element must have unit trace");
    return BipartiteOperator(rho.n, Matrix(n * rho.mat));
  }
  if (std::abs(tr - n) > 1e-6)
    throw PreconditionError("scale_Dn: D element must have trace n");
  return BipartiteOperator(rho.n, Matrix(rho.mat / n));
}

}  // namespace bpnorm
