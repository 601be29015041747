#include <doctest.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "anomaly/fields.hpp"
#include "anomaly/forms.hpp"
#include "anomaly/grid.hpp"

using namespace anomaly;

namespace {

constexpr double kPi = std::numbers::pi;

// Wrapper hiding the analytic jets of an inner field, so every partial goes
// through the finite-difference fallback of the MatFn base class.
class ValueOnly : public MatFn {
 public:
  explicit ValueOnly(MatFnPtr inner) : inner_(std::move(inner)) {}
  int rows() const override { return inner_->rows(); }
  Mat value(const ManifoldGrid& g, const double* c) const override {
    return inner_->value(g, c);
  }

 private:
  MatFnPtr inner_;
};

}  // namespace

TEST_SUITE("forms") {

TEST_CASE("grid volumes match the closed-form values") {
  CHECK(std::abs(build_grid(Manifold::S1, 8).volume() - 2.0 * kPi) <= 1e-12);
  CHECK(std::abs(build_grid(Manifold::S2, 8).volume() - 4.0 * kPi) <= 1e-12);
  // The S3 jacobian sin^2(psi) doubles the frequency, so Gauss order 8 only
  // reaches ~2e-9; order 12 is converged.
  CHECK(std::abs(build_grid(Manifold::S3, 8).volume() - 2.0 * kPi * kPi) <= 1e-8);
  CHECK(std::abs(build_grid(Manifold::S3, 12).volume() - 2.0 * kPi * kPi) <= 1e-12);
  CHECK(std::abs(build_grid(Manifold::B3, 8).volume() - 4.0 * kPi / 3.0) <= 1e-12);
  CHECK(std::abs(build_grid(Manifold::T3, 8).volume() - std::pow(2.0 * kPi, 3)) <= 1e-9);
  const ManifoldGrid s3c = build_grid(Manifold::S3, 6);
  const ManifoldGrid s2c = build_grid(Manifold::S2, 6);
  const ManifoldGrid pg = product_grid(s3c, s2c, Manifold::S3xS2);
  // Exactly the product of the factor quadratures ...
  CHECK(std::abs(pg.volume() - s3c.volume() * s2c.volume()) <= 1e-9);
  // ... which at order 6 sits within ~2e-4 of the closed form.
  CHECK(std::abs(pg.volume() - 2.0 * kPi * kPi * 4.0 * kPi) <= 1e-3);
}

TEST_CASE("spherical quadrature reproduces known integrals") {
  // int_{S2} (3 cos^2 th - 1) dOmega = 0 and int_{S2} cos^2 th = 4 pi / 3.
  auto measure = [](int order) {
    const ManifoldGrid s2 = build_grid(Manifold::S2, order);
    double legendre = 0.0, cos2 = 0.0;
    for (std::size_t i = 0; i < s2.num_nodes(); ++i) {
      const auto c = s2.coords(i);
      const double w = s2.coord_weight(i) * s2.jac[i];
      legendre += w * (3.0 * std::cos(c[0]) * std::cos(c[0]) - 1.0);
      cos2 += w * std::cos(c[0]) * std::cos(c[0]);
    }
    return std::pair<double, double>{std::abs(legendre),
                                     std::abs(cos2 - 4.0 * kPi / 3.0)};
  };
  // Gauss in theta against the sin(theta) jacobian: order 8 carries ~7e-7 of
  // truncation, order 12 is converged -- spectral decay, not exactness.
  const auto [l8, c8] = measure(8);
  CHECK(l8 <= 1e-5);
  CHECK(c8 <= 1e-5);
  const auto [l12, c12] = measure(12);
  CHECK(l12 <= 1e-12);
  CHECK(c12 <= 1e-12);
}

TEST_CASE("trapezoid rule on the circle converges spectrally") {
  // int_0^{2pi} e^{cos th} dth = 2 pi I_0(1) = 7.9549265210128456971.
  const double exact = 7.9549265210128456971;
  auto value = [](int order) {
    const ManifoldGrid s1 = build_grid(Manifold::S1, order);
    double acc = 0.0;
    for (std::size_t i = 0; i < s1.num_nodes(); ++i)
      acc += s1.coord_weight(i) * s1.jac[i] * std::exp(std::cos(s1.coords(i)[0]));
    return acc;
  };
  CHECK(std::abs(value(8) - exact) <= 1e-8);
  CHECK(std::abs(value(16) - exact) <= 1e-13);
}

TEST_CASE("boundary sphere chart agrees with the ball chart at r = 1") {
  const ManifoldGrid b3 = build_grid(Manifold::B3, 8);
  const ManifoldGrid s2b = boundary_sphere(b3);
  CHECK(std::abs(s2b.volume() - 4.0 * kPi) <= 1e-12);
  const GaugeBasis basis = build_gauge_basis(2, AlgebraKind::su);
  SplitMix64 rng(3);
  const MatFnPtr f = random_lie_field(basis, b3, rng, 0.9);
  for (std::size_t i = 0; i < s2b.num_nodes(); i += 7) {
    const auto cb = s2b.coords(i);
    const double cball[3] = {1.0, cb[0], cb[1]};
    const Mat diff = f->value(s2b, cb.data()) - f->value(b3, cball);
    CHECK(diff.cwiseAbs().maxCoeff() <= 1e-13);
  }
}

TEST_CASE("index combos enumerate increasing tuples lexicographically") {
  const auto c32 = index_combos(3, 2);
  REQUIRE(c32.size() == 3);
  CHECK((c32[0][0] == 0 && c32[0][1] == 1));
  CHECK((c32[1][0] == 0 && c32[1][1] == 2));
  CHECK((c32[2][0] == 1 && c32[2][1] == 2));
  CHECK(index_combos(5, 3).size() == 10);
  CHECK(index_combos(5, 5).size() == 1);
}

TEST_CASE("finite-difference fallback matches analytic jets") {
  const ManifoldGrid s3 = build_grid(Manifold::S3, 8);
  const GaugeBasis basis = build_gauge_basis(2, AlgebraKind::su);
  SplitMix64 rng(11);
  const MatFnPtr poly = random_lie_field(basis, s3, rng, 0.8);
  const ValueOnly masked(poly);
  for (std::size_t i = 0; i < s3.num_nodes(); i += 97) {
    const auto c = s3.coords(i);
    for (int ax = 0; ax < 3; ++ax) {
      const Mat diff = masked.partial(s3, c.data(), ax) - poly->partial(s3, c.data(), ax);
      CHECK(diff.cwiseAbs().maxCoeff() <= 1e-7);
    }
    const Mat dd =
        masked.second(s3, c.data(), 0, 1) - poly->second(s3, c.data(), 0, 1);
    CHECK(dd.cwiseAbs().maxCoeff() <= 1e-5);
  }
}

TEST_CASE("exterior derivative squares to zero") {
  const ManifoldGrid s3 = build_grid(Manifold::S3, 8);
  const GaugeBasis basis = build_gauge_basis(2, AlgebraKind::su);
  SplitMix64 rng(7);
  // Analytic jets: d(df) vanishes to rounding.
  const MatFnPtr poly = random_lie_field(basis, s3, rng, 0.8);
  CHECK(max_abs(exterior_d(s3, *grad_form(poly))) <= 1e-12);
  // Group-map jets fall back to finite differences at second order.
  const MatFnPtr g = random_group_map(basis, s3, rng, 0.6);
  CHECK(max_abs(exterior_d(s3, *grad_form(g))) <= 1e-5);
}

TEST_CASE("closed-manifold Stokes: integral of an exact 2-form vanishes") {
  const ManifoldGrid s2 = build_grid(Manifold::S2, 12);
  const GaugeBasis basis = build_gauge_basis(2, AlgebraKind::su);
  SplitMix64 rng(13);
  const MatFnPtr u = random_lie_field(basis, s2, rng, 0.8);
  const MatFnPtr v = random_lie_field(basis, s2, rng, 0.8);
  const LieForm d_udv = exterior_d(s2, *udv_form(u, v));
  CHECK(std::abs(integrate_top_trace(d_udv)) <= 1e-10);
}

TEST_CASE("maurer-cartan forms are flat") {
  const ManifoldGrid s3 = build_grid(Manifold::S3, 8);
  const GaugeBasis basis = build_gauge_basis(2, AlgebraKind::su);
  SplitMix64 rng(19);
  const MatFnPtr g = random_group_map(basis, s3, rng, 0.7);
  // Left form g^-1 dg: d(omega) + omega ^ omega = 0.
  CHECK(max_abs(curvature(s3, *maurer_cartan(g, true))) <= 1e-6);
  // Right form dg g^-1 flips the structure-equation sign:
  // d(omega) - omega ^ omega = 0.
  const OneFormPtr right = maurer_cartan(g, false);
  const LieForm w1 = sample1(s3, *right);
  CHECK(max_abs(sub(exterior_d(s3, *right), product_wedge(w1, w1))) <= 1e-6);
  // Using the left-convention curvature on the right form must NOT vanish
  // (guards against the two routes collapsing into one).
  CHECK(max_abs(curvature(s3, *right)) > 1e-2);
}

TEST_CASE("gauge transformation of a connection composes as expected") {
  // A^g for g = exp(i H) constant equals g^-1 A g (the inhomogeneous term
  // vanishes); checked pointwise.
  const ManifoldGrid s3 = build_grid(Manifold::S3, 8);
  const GaugeBasis basis = build_gauge_basis(2, AlgebraKind::su);
  SplitMix64 rng(29);
  std::vector<MatFnPtr> comps;
  for (int k = 0; k < 3; ++k) comps.push_back(random_lie_field(basis, s3, rng, 0.8));
  const OneFormPtr a = component_form(std::move(comps));
  const Mat h = random_algebra_element(basis, rng, 0.9).matrix;
  const MatFnPtr g = std::make_shared<GroupMapField>(const_field(h));
  const OneFormPtr ag = gauge_transformed(a, g);
  const auto c = s3.coords(101);
  const Mat gval = g->value(s3, c.data());
  for (int i = 0; i < 3; ++i) {
    const Mat expected = gval.adjoint() * a->comp(s3, c.data(), i) * gval;
    CHECK((ag->comp(s3, c.data(), i) - expected).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("wedge algebra identities hold pointwise") {
  const ManifoldGrid s3 = build_grid(Manifold::S3, 8);
  const GaugeBasis basis = build_gauge_basis(2, AlgebraKind::su);
  SplitMix64 rng(31);
  std::vector<MatFnPtr> ca, cb;
  for (int k = 0; k < 3; ++k) {
    ca.push_back(random_lie_field(basis, s3, rng, 0.8));
    cb.push_back(random_lie_field(basis, s3, rng, 0.8));
  }
  const LieForm a = sample1(s3, *component_form(ca));
  const LieForm b = sample1(s3, *component_form(cb));
  // tr(a ^ b) = -tr(b ^ a) for 1-forms.
  const LieForm ab = product_wedge(a, b);
  const LieForm ba = product_wedge(b, a);
  double worst = 0.0;
  for (int comp = 0; comp < ab.ncomp(); ++comp)
    for (std::size_t n = 0; n < s3.num_nodes(); n += 53)
      worst = std::max(worst,
                       std::abs((ab.at(comp, n).trace() + ba.at(comp, n).trace())));
  CHECK(worst <= 1e-12);
  // Ungraded bracket = a^b - b^a; graded bracket of odd forms = a^b + b^a.
  CHECK(max_abs(sub(ungraded_bracket_wedge(a, b), sub(ab, ba))) <= 1e-13);
  CHECK(max_abs(sub(bracket_wedge(a, b), add(ab, ba))) <= 1e-13);
}

TEST_CASE("bump field jets are analytic and supported inside the declared ball") {
  const ManifoldGrid t3 = build_grid(Manifold::T3, 16);
  const BumpField bump({3.0, 3.0, 3.0}, 0.38);
  // Gaussian tails: ~3e-6 just past the effective-localization radius
  // 4.9 sigma, below 1e-12 past 7.5 sigma.
  const double near_edge[3] = {3.0 + 4.9 * 0.38 + 0.05, 3.0, 3.0};
  CHECK(std::abs(bump.scalar(near_edge)) <= 1e-5);
  const double far[3] = {3.0 + 7.5 * 0.38 + 0.05, 3.0, 3.0};
  CHECK(std::abs(bump.scalar(far)) <= 1e-12);
  // Analytic partial vs central difference.
  const double at[3] = {2.8, 3.1, 3.2};
  const double h = 1e-5;
  for (int ax = 0; ax < 3; ++ax) {
    double lo[3] = {at[0], at[1], at[2]}, hi[3] = {at[0], at[1], at[2]};
    lo[ax] -= h;
    hi[ax] += h;
    const double fd = (bump.scalar(hi) - bump.scalar(lo)) / (2.0 * h);
    CHECK(std::abs(bump.scalar_partial(at, ax) - fd) <= 1e-8);
  }
  (void)t3;
}

}  // TEST_SUITE
