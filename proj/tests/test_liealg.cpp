#include <doctest.h>

#include <cmath>

#include "anomaly/liealg.hpp"

using namespace anomaly;

namespace {

double max_abs_mat(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_SUITE("liealg") {

TEST_CASE("gauge basis dimensions and trace orthonormality") {
  for (const int p : {2, 3, 4}) {
    const GaugeBasis su = build_gauge_basis(p, AlgebraKind::su);
    CHECK(su.dim() == p * p - 1);
    const GaugeBasis u = build_gauge_basis(p, AlgebraKind::u);
    CHECK(u.dim() == p * p);
    for (const GaugeBasis* b : {&su, &u}) {
      for (int a = 0; a < b->dim(); ++a) {
        CHECK(max_abs_mat(b->tau[a] - b->tau[a].adjoint()) <= 1e-14);  // Hermitian
        for (int c = 0; c < b->dim(); ++c) {
          const double expected = a == c ? 0.5 : 0.0;
          CHECK(std::abs((b->tau[a] * b->tau[c]).trace().real() - expected) <= 1e-13);
          CHECK(std::abs((b->tau[a] * b->tau[c]).trace().imag()) <= 1e-13);
        }
      }
    }
  }
}

TEST_CASE("u(p) basis prepends the normalized identity") {
  const GaugeBasis u3 = build_gauge_basis(3, AlgebraKind::u);
  CHECK(max_abs_mat(u3.tau[0] - Mat::Identity(3, 3) / std::sqrt(6.0)) <= 1e-14);
}

TEST_CASE("coefficients and realize round-trip") {
  const GaugeBasis b = build_gauge_basis(3, AlgebraKind::u);
  SplitMix64 rng(5);
  const AlgebraElement e = random_algebra_element(b, rng, 1.3);
  CHECK(max_abs_mat(e.matrix - b.realize(e.coeff)) <= 1e-13);
  const Eigen::VectorXd back = b.coefficients(e.matrix);
  CHECK((back - e.coeff).cwiseAbs().maxCoeff() <= 1e-13);
  CHECK(e.coeff.cwiseAbs().maxCoeff() <= 1.3);
}

TEST_CASE("su(2) structure constants are the Levi-Civita symbol, d vanishes") {
  const StructureConstants sc = structure_constants(build_gauge_basis(2, AlgebraKind::su));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        double eps = 0.0;
        if (a != b && b != c && a != c)
          eps = ((b - a + 3) % 3 == 1) ? 1.0 : -1.0;  // cyclic order sign
        CHECK(std::abs(sc.lam(a, b, c) - eps) <= 1e-13);
        CHECK(std::abs(sc.d(a, b, c)) <= 1e-13);
      }
}

TEST_CASE("su(3) structure constants match the Gell-Mann tables") {
  const StructureConstants sc = structure_constants(build_gauge_basis(3, AlgebraKind::su));
  // f_123 = 1, f_147 = 1/2, f_458 = sqrt(3)/2 (0-indexed below).
  CHECK(std::abs(sc.lam(0, 1, 2) - 1.0) <= 1e-13);
  CHECK(std::abs(sc.lam(0, 3, 6) - 0.5) <= 1e-13);
  CHECK(std::abs(sc.lam(3, 4, 7) - std::sqrt(3.0) / 2.0) <= 1e-13);
  // d_118 = 1/sqrt(3), d_146 = 1/2, d_888 = -1/sqrt(3).
  CHECK(std::abs(sc.d(0, 0, 7) - 1.0 / std::sqrt(3.0)) <= 1e-13);
  CHECK(std::abs(sc.d(0, 3, 5) - 0.5) <= 1e-13);
  CHECK(std::abs(sc.d(7, 7, 7) + 1.0 / std::sqrt(3.0)) <= 1e-13);
  // Total antisymmetry of lambda / symmetry of d on random triples.
  SplitMix64 rng(17);
  for (int t = 0; t < 50; ++t) {
    const int a = static_cast<int>(rng.next_below(8));
    const int b = static_cast<int>(rng.next_below(8));
    const int c = static_cast<int>(rng.next_below(8));
    CHECK(std::abs(sc.lam(a, b, c) + sc.lam(b, a, c)) <= 1e-13);
    CHECK(std::abs(sc.lam(a, b, c) - sc.lam(b, c, a)) <= 1e-13);
    CHECK(std::abs(sc.d(a, b, c) - sc.d(b, a, c)) <= 1e-13);
    CHECK(std::abs(sc.d(a, b, c) - sc.d(b, c, a)) <= 1e-13);
  }
}

TEST_CASE("closure identities for commutator and anticommutator") {
  for (const AlgebraKind kind : {AlgebraKind::su, AlgebraKind::u}) {
    const GaugeBasis basis = build_gauge_basis(3, kind);
    const StructureConstants sc = structure_constants(basis);
    const int dim = basis.dim();
    const cplx iunit(0.0, 1.0);
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        Mat comm = basis.tau[a] * basis.tau[b] - basis.tau[b] * basis.tau[a];
        Mat anti = basis.tau[a] * basis.tau[b] + basis.tau[b] * basis.tau[a];
        for (int c = 0; c < dim; ++c) {
          comm -= iunit * sc.lam(a, b, c) * basis.tau[c];
          anti -= sc.d(a, b, c) * basis.tau[c];
        }
        if (kind == AlgebraKind::su && a == b) anti -= Mat::Identity(3, 3) / 3.0;
        CHECK(max_abs_mat(comm) <= 1e-13);
        CHECK(max_abs_mat(anti) <= 1e-13);
      }
  }
}

TEST_CASE("tensor basis products are trace orthonormal") {
  const TensorBasis tb = TensorBasis::build(2);
  CHECK(tb.gdim() == 4);
  for (int mu = 0; mu < 4; ++mu)
    for (int a = 0; a < 4; ++a)
      for (int nu = 0; nu < 4; ++nu)
        for (int b = 0; b < 4; ++b) {
          const cplx tr = (tb.element(mu, a) * tb.element(nu, b)).trace();
          const double expected = (mu == nu && a == b) ? 1.0 : 0.0;
          CHECK(std::abs(tr - cplx(expected, 0.0)) <= 1e-13);
        }
}

TEST_CASE("tensor decompose/realize round-trip and commutator split") {
  const TensorBasis tb = TensorBasis::build(3);
  SplitMix64 rng(23);
  Mat x = Mat::Zero(6, 6), y = Mat::Zero(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      x(i, j) = cplx(rng.next_symmetric(1.0), rng.next_symmetric(1.0));
      y(i, j) = cplx(rng.next_symmetric(1.0), rng.next_symmetric(1.0));
    }
  // Hermitize so the real-coefficient basis spans them.
  x = (x + x.adjoint().eval()) / 2.0;
  y = (y + y.adjoint().eval()) / 2.0;
  const TensorElement ex = tb.decompose(x);
  const TensorElement ey = tb.decompose(y);
  CHECK(max_abs_mat(tb.realize(ex.coeff) - x) <= 1e-12);
  double split = 0.0;
  const Mat comm = tensor_commutator(tb, ex, ey, &split);
  CHECK(max_abs_mat(comm - (x * y - y * x)) <= 1e-12);
  CHECK(split <= 1e-12);
}

}  // TEST_SUITE
