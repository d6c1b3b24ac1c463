#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bpnorm/positivity.hpp"
#include "bpnorm/types.hpp"

namespace bpnorm {

struct ExposureWitness {
  BipartiteOperator a;       // PSD density of the exposing functional
  double shift = 0.0;        // constant c applied through a + (c/n) I
  bool separable = false;
};

// a + (c/n) I; gaps Tr(a sigma) - Tr(a tau) are unchanged on the Tr = n slice.
ExposureWitness positivize_witness(const BipartiteOperator& a, double c);

struct SampleDOptions {
  int kraus_terms = 2;
  MembershipOptions membership;  // used by callers to re-verify samples
};

// rho_phi of a random unital positive map: convex combination of a Kraus block
// (random isometry completion) and a co-Kraus block. Covers only the
// decomposable region conv(CP, co-CP).
BipartiteOperator sample_D(int n, std::uint64_t seed, std::uint64_t counter = 0,
                           const SampleDOptions& opt = {});

struct ExposureReport {
  BipartiteOperator candidate;
  ExposureWitness witness;
  int samples = 0;
  double min_gap = 0.0;       // min over sampled sigma != rho0 of <a,rho0> - <a,sigma>
  bool supported = false;     // Monte-Carlo evidence only, never proof
  std::string sampler;
  std::uint64_t seed = 0;
  // refuted => a re-verifiable counterexample is attached
  std::optional<BipartiteOperator> counterexample;
};

struct ExposureOptions {
  double distinctness_tol = 1e-8;  // Frobenius distance for sigma != rho0
  SampleDOptions sampler;
};

// Samples N elements of D (random unital positive maps plus targeted
// perturbations of rho0 and catalog mixtures) and tests the variational
// inequality <a, rho0> > <a, sigma>.
ExposureReport check_exposure(const BipartiteOperator& rho0, const ExposureWitness& a,
                              int samples, std::uint64_t seed,
                              const ExposureOptions& opt = {});

// Self-witness test for a bp symmetry a in D_1; asserts Tr(a a) = n^2 first.
ExposureReport symmetry_exposure_check(const BipartiteOperator& a, int samples,
                                       std::uint64_t seed,
                                       const ExposureOptions& opt = {});

// Witness a = p; rho0 is p itself or an e-symmetry p - q with p rho0 = p.
ExposureReport projection_exposure_check(const BipartiteOperator& p,
                                         const BipartiteOperator& rho0, int samples,
                                         std::uint64_t seed,
                                         const ExposureOptions& opt = {});

struct RotundDirectionResult {
  double quotients[3] = {0, 0, 0};  // t = 1e-2, 1e-3, 1e-4
  bool rotund_along = false;        // all quotients < 1 - margin
};

struct RotundReport {
  std::vector<RotundDirectionResult> directions;
  bool rotund = false;  // along every tested direction
};

RotundReport rotund_test(const BipartiteOperator& x,
                         const std::vector<BipartiteOperator>& directions,
                         const AlphaOptions& opt = {});

struct SmoothReport {
  int clusters = 0;
  bool smooth = false;  // numerically: exactly one maximizer cluster
  std::vector<SymmetryWitness> representatives;
};

// Clusters the (s, g) maximizers found across alpha_norm restarts; >= 2
// functionally distinct clusters means not smooth.
SmoothReport smooth_test(const BipartiteOperator& x, const AlphaOptions& opt = {});

struct SectionReport {
  double left_slope = 0.0;
  double right_slope = 0.0;
  bool corner = false;  // slopes differ by > 1e-2
  std::vector<double> angles;
  std::vector<double> radii;  // boundary radius 1/alpha(z(theta))
};

struct SectionOptions {
  int resolution = 720;
  double corner_tol = 1e-2;
  AlphaOptions alpha;
};

SectionReport trace_section(const BipartiteOperator& x, const BipartiteOperator& y,
                            const SectionOptions& opt = {});

struct StrongNonSmoothReport {
  std::vector<SectionReport> sections;
  bool strongly_non_smooth = false;  // corner at x in every tested section
};

StrongNonSmoothReport strong_nonsmooth_test(const BipartiteOperator& x,
                                            const std::vector<BipartiteOperator>& partners,
                                            const SectionOptions& opt = {});

enum class ScaleDirection { ToD, ToDn };  // multiply by n / divide by n

BipartiteOperator scale_Dn(const BipartiteOperator& rho, ScaleDirection dir);

}  // namespace bpnorm
