#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bpnorm/maps.hpp"
#include "bpnorm/norms.hpp"
#include "bpnorm/rng.hpp"
#include "bpnorm/structure.hpp"
#include "oracles.hpp"

using namespace bpnorm;

namespace {

BipartiteOperator p_tensor_i(int n) {
  Matrix p = Matrix::Zero(n, n);
  p(0, 0) = 1.0;
  return make_p_tensor_identity(p, n);
}

}  // namespace

TEST_CASE("alpha of the canonical operators") {
  for (int n : {2, 3}) {
    for (const auto& sigma : {make_swap(n), make_max_entangled(n), p_tensor_i(n)}) {
      auto est = alpha_norm(sigma);
      CHECK(est.value == doctest::Approx(1.0).epsilon(2e-4));
      CHECK(std::abs(evaluate_alpha_witness(sigma, est.witness) - est.value) <= 1e-9);
      CHECK(is_symmetry(est.witness.s));
      CHECK(std::abs(est.witness.g.norm() - 1.0) <= 1e-10);
    }
  }

  BipartiteOperator id3(3, Matrix(Matrix::Identity(9, 9)));
  CHECK(alpha_norm(id3).value == doctest::Approx(3.0).epsilon(1e-6));

  // Unit-trace maximally entangled pure state: alpha = 1/n.
  Vector f = max_entangled_vector(2);
  BipartiteOperator pure(2, Matrix(f * f.adjoint()));
  CHECK(alpha_norm(pure).value == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("alpha is homogeneous and subadditive") {
  auto gen = substream(21, 0);
  BipartiteOperator x(2, random_hermitian(4, gen));
  BipartiteOperator y(2, random_hermitian(4, gen));
  double ax = alpha_norm(x).value;
  double ay = alpha_norm(y).value;

  BipartiteOperator sx(2, Matrix(-2.5 * x.mat));
  CHECK(alpha_norm(sx).value == doctest::Approx(2.5 * ax).epsilon(1e-8));

  BipartiteOperator sum(2, Matrix(x.mat + y.mat));
  CHECK(alpha_norm(sum).value <= ax + ay + 1e-8);
}

TEST_CASE("alpha against the two-parameter-grid brute force at n = 2") {
  for (int trial = 0; trial < 10; ++trial) {
    auto gen = substream(22, static_cast<std::uint64_t>(trial));
    BipartiteOperator sigma(2, random_hermitian(4, gen));
    double fast = alpha_norm(sigma).value;
    double slow = oracle::brute_alpha_2(sigma);
    CHECK(fast == doctest::Approx(slow).epsilon(1e-4));
  }
}

TEST_CASE("alpha rejects non-Hermitian input") {
  auto gen = substream(23, 0);
  BipartiteOperator bad(2, random_gaussian_matrix(4, 4, gen));
  CHECK_THROWS_AS(alpha_norm(bad), PreconditionError);
}

TEST_CASE("projector closed form agrees with the optimizer") {
  auto gen = substream(24, 0);
  const int n = 3;
  Matrix u = random_unitary(n * n, gen);
  Matrix p = u.leftCols(4) * u.leftCols(4).adjoint();
  BipartiteOperator proj(n, (p + p.adjoint()) / 2.0);
  double closed = alpha_of_projector(proj);
  double opt = alpha_norm(proj).value;
  CHECK(opt == doctest::Approx(closed).epsilon(1e-6));

  BipartiteOperator notp(n, random_hermitian(9, gen));
  CHECK_THROWS_AS(alpha_of_projector(notp), PreconditionError);
}

TEST_CASE("pairing of the swap with the transposition") {
  for (int n : {2, 3}) {
    Complex v = pairing(make_swap(n), transpose_map(n));
    CHECK(std::abs(v - Complex(double(n * n), 0.0)) <= 1e-12);
  }
}

TEST_CASE("pi interval brackets and pins the maximally entangled state") {
  for (int n : {2, 3}) {
    Vector f = max_entangled_vector(n);
    BipartiteOperator pure(n, Matrix(f * f.adjoint()));
    auto est = pi_interval(pure);
    CHECK(est.lower >= double(n) - 1e-6);
    CHECK(est.upper <= double(n) + 1e-6);
    CHECK(est.gap() <= 2e-6);
  }
}

TEST_CASE("pi interval on random pure states respects the Schmidt sandwich") {
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto gen = substream(25, static_cast<std::uint64_t>(n * 100 + trial));
      Vector f = random_unit_vector(n * n, gen);
      BipartiteOperator pure(n, Matrix(f * f.adjoint()));
      auto est = pi_interval(pure);
      int ns = schmidt_decompose(f).schmidt_rank;
      CHECK(est.lower >= 1.0 - 1e-6);
      CHECK(est.upper <= double(ns) + 1e-6);
      CHECK(est.lower <= est.upper + 1e-9);
      // the lower-bound witness must itself be in the alpha unit ball
      CHECK(est.lower_witness_alpha <= 1.0 + 1e-6);
    }
  }
}

TEST_CASE("pi of the identity equals n") {
  for (int n : {2, 3}) {
    BipartiteOperator id(n, Matrix(Matrix::Identity(n * n, n * n)));
    auto est = pi_interval(id);
    CHECK(est.lower >= double(n) - 1e-6);  // swap witness: Tr(W I) = n
    CHECK(est.upper <= double(n) + 1e-9);  // single-term decomposition I (x) I
  }
}

TEST_CASE("pi interval is two-sided on random Hermitian operators") {
  for (int trial = 0; trial < 5; ++trial) {
    auto gen = substream(26, static_cast<std::uint64_t>(trial));
    BipartiteOperator sigma(2, random_hermitian(4, gen));
    auto est = pi_interval(sigma);
    CHECK(est.lower <= est.upper + 1e-9);
    CHECK(est.upper_terms >= 1);
  }
}
