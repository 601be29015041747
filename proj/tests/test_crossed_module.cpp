#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "anomaly/common.hpp"
#include "anomaly/crossed_module.hpp"
#include "anomaly/group_cohomology.hpp"

using namespace anomaly;

namespace {

int element_order(const FiniteGroup& g, int x) {
  int k = 1;
  int cur = x;
  while (cur != 0) {
    cur = g.op(cur, x);
    ++k;
  }
  return k;
}

Mat su2_from_axis_angle(double t, double nx, double ny, double nz) {
  const double norm = std::sqrt(nx * nx + ny * ny + nz * nz);
  nx /= norm;
  ny /= norm;
  nz /= norm;
  Mat u(2, 2);
  const cplx i(0.0, 1.0);
  const double c = std::cos(t), s = std::sin(t);
  u(0, 0) = c + i * s * nz;
  u(0, 1) = i * s * nx + s * ny;
  u(1, 0) = i * s * nx - s * ny;
  u(1, 1) = c - i * s * nz;
  return u;
}

}  // namespace

TEST_SUITE("crossed_module") {
  TEST_CASE("conjugation module on S3 satisfies both axioms") {
    const AxiomReport r = check_axioms(conjugation_module(FiniteGroup::symmetric3()));
    CHECK(r.passed());
    CHECK(r.witness.empty());
  }

  TEST_CASE("normal inclusion A3 <= S3 satisfies both axioms") {
    const FiniteGroup s3 = FiniteGroup::symmetric3();
    int three_cycle = -1;
    for (int x = 1; x < s3.n; ++x)
      if (element_order(s3, x) == 3) {
        three_cycle = x;
        break;
      }
    REQUIRE(three_cycle >= 0);
    const std::vector<int> a3 = {0, three_cycle, s3.op(three_cycle, three_cycle)};
    const AxiomReport r = check_axioms(inclusion_module(s3, a3));
    CHECK(r.passed());
  }

  TEST_CASE("non-normal subgroup of S3 is rejected") {
    const FiniteGroup s3 = FiniteGroup::symmetric3();
    int transposition = -1;
    for (int x = 1; x < s3.n; ++x)
      if (element_order(s3, x) == 2) {
        transposition = x;
        break;
      }
    REQUIRE(transposition >= 0);
    CHECK_THROWS_AS(inclusion_module(s3, {0, transposition}), std::invalid_argument);
  }

  TEST_CASE("non-closed subset of S3 is rejected") {
    const FiniteGroup s3 = FiniteGroup::symmetric3();
    int three_cycle = -1;
    for (int x = 1; x < s3.n; ++x)
      if (element_order(s3, x) == 3) three_cycle = x;
    REQUIRE(three_cycle >= 0);
    CHECK_THROWS_AS(inclusion_module(s3, {0, three_cycle}), std::invalid_argument);
  }

  TEST_CASE("abelian quotient Z4 ->> Z2 satisfies both axioms") {
    const AxiomReport r = check_axioms(
        quotient_module(FiniteGroup::cyclic(4), FiniteGroup::cyclic(2), {0, 1, 0, 1}));
    CHECK(r.passed());
  }

  TEST_CASE("non-homomorphism projection is rejected") {
    CHECK_THROWS_AS(
        quotient_module(FiniteGroup::cyclic(4), FiniteGroup::cyclic(2), {0, 1, 0, 0}),
        std::invalid_argument);
  }

  TEST_CASE("sabotaged S3 module fails Peiffer with a named witness") {
    const AxiomReport r = check_axioms(sabotage_s3());
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.peiffer_ok);
    CHECK_FALSE(r.witness.empty());
  }

  TEST_CASE("central extension Z2 -> Z4 ->> Z2 yields a crossed module") {
    const AxiomReport r = check_axioms(from_central_extension(z2_z4_z2_extension()));
    CHECK(r.passed());
  }

  TEST_CASE("trivial product extension yields a crossed module") {
    const CentralExtension ext =
        trivial_product_extension(FiniteGroup::cyclic(3), FiniteGroup::symmetric3());
    const AxiomReport r = check_axioms(from_central_extension(ext));
    CHECK(r.passed());
  }

  TEST_CASE("non-central kernel is rejected") {
    const FiniteGroup s3 = FiniteGroup::symmetric3();
    CentralExtension ext;
    ext.h = s3;
    ext.g = FiniteGroup::cyclic(2);
    ext.proj.assign(s3.n, 0);
    int transposition = -1;
    for (int x = 1; x < s3.n; ++x)
      if (element_order(s3, x) == 2) {
        ext.proj[x] = 1;  // sign map: transpositions to the nontrivial class
        if (transposition < 0) transposition = x;
      }
    REQUIRE(is_homomorphism(s3, ext.g, ext.proj));
    ext.section = {0, transposition};
    CHECK_THROWS_AS(from_central_extension(ext), std::invalid_argument);
  }

  TEST_CASE("covering map basics: identity, orthogonality, kernel") {
    const Mat id2 = Mat::Identity(2, 2);
    CHECK((su2_to_so3(id2) - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <= 1e-14);
    SplitMix64 rng(5);
    for (int s = 0; s < 12; ++s) {
      const Mat u = su2_from_axis_angle(3.0 * rng.next_double(), rng.next_symmetric(1.0),
                                        rng.next_symmetric(1.0), rng.next_symmetric(1.0));
      const Eigen::Matrix3d r = su2_to_so3(u);
      CHECK((r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <=
            1e-12);
      CHECK(std::abs(r.determinant() - 1.0) <= 1e-12);
      // Z2 kernel: -U covers the same rotation.
      CHECK((su2_to_so3(-u) - r).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }

  TEST_CASE("covering map sends the diagonal one-parameter group to z-rotations") {
    const double phi = 0.7;
    Mat u = Mat::Zero(2, 2);
    u(0, 0) = std::polar(1.0, -phi / 2.0);
    u(1, 1) = std::polar(1.0, phi / 2.0);
    Eigen::Matrix3d expect;
    expect << std::cos(phi), -std::sin(phi), 0.0,  //
        std::sin(phi), std::cos(phi), 0.0,         //
        0.0, 0.0, 1.0;
    CHECK((su2_to_so3(u) - expect).cwiseAbs().maxCoeff() <= 1e-12);
  }

  TEST_CASE("section inverts the covering map") {
    SplitMix64 rng(9);
    for (int s = 0; s < 12; ++s) {
      const Mat u = su2_from_axis_angle(3.0 * rng.next_double(), rng.next_symmetric(1.0),
                                        rng.next_symmetric(1.0), rng.next_symmetric(1.0));
      const Eigen::Matrix3d r = su2_to_so3(u);
      const Mat lift = so3_section(r);
      CHECK((su2_to_so3(lift) - r).cwiseAbs().maxCoeff() <= 1e-12);
      // The lift is again special unitary.
      CHECK((lift * lift.adjoint() - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK(std::abs(lift.determinant() - cplx(1.0, 0.0)) <= 1e-12);
    }
  }

  TEST_CASE("sampled SU(2) -> SO(3) crossed module holds to 1e-10") {
    const Su2So3Report r = su2_so3_module_check(200, 2026);
    CHECK(r.samples == 200);
    CHECK(r.delta_hom_residual <= 1e-10);
    CHECK(r.section_residual <= 1e-10);
    CHECK(r.peiffer_residual <= 1e-10);
    CHECK(r.equivariance_residual <= 1e-10);
    CHECK(r.worst() <= 1e-10);
    CHECK_THROWS_AS(su2_so3_module_check(0, 1), std::invalid_argument);
  }
}
