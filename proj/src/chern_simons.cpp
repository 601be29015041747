#include "anomaly/chern_simons.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace anomaly {

namespace {

constexpr double kPi = std::numbers::pi;

// ------------------------------------------------------------------------
// Exact exterior algebra for the d CS_3 = tr(F^F) identity.  Forms on an R^4
// patch with polynomial coefficients are tracked as 1-jets at the origin:
// per component (indexed by axis bitmask) the value and the four first
// partials.  Wedge propagates jets by the product rule; the exterior
// derivative consumes one jet level.  For an affine connection every
// quantity the check reads is exact multilinear algebra.
struct JetForm {
  int rows = 0;
  std::array<Mat, 16> v;
  std::array<std::array<Mat, 4>, 16> g;

  explicit JetForm(int r) : rows(r) {
    for (int m = 0; m < 16; ++m) {
      v[m] = Mat::Zero(r, r);
      for (int ax = 0; ax < 4; ++ax) g[m][ax] = Mat::Zero(r, r);
    }
  }
};

// Sign of sorting the concatenation (sorted a, sorted b) for disjoint masks:
// (-1)^{#{(i,j): i in a, j in b, i > j}}.
double merge_sign(unsigned a, unsigned b) {
  int inv = 0;
  for (int j = 0; j < 4; ++j)
    if (b >> j & 1u) inv += std::popcount(a >> (j + 1));
  return (inv % 2 == 0) ? 1.0 : -1.0;
}

JetForm jet_wedge(const JetForm& x, const JetForm& y) {
  JetForm r(x.rows);
  for (unsigned i = 0; i < 16; ++i)
    for (unsigned j = 0; j < 16; ++j) {
      if (i & j) continue;
      const double s = merge_sign(i, j);
      r.v[i | j] += s * x.v[i] * y.v[j];
      for (int ax = 0; ax < 4; ++ax)
        r.g[i | j][ax] += s * (x.g[i][ax] * y.v[j] + x.v[i] * y.g[j][ax]);
    }
  return r;
}

// Exterior derivative; the result carries exact values, and exact gradients
// only when the argument's gradients are constant (true for the affine A,
// whose second derivatives vanish).  Callers never differentiate twice.
JetForm jet_d(const JetForm& x) {
  JetForm r(x.rows);
  for (unsigned m = 0; m < 16; ++m)
    for (int ax = 0; ax < 4; ++ax) {
      if (m >> ax & 1u) continue;
      r.v[m | (1u << ax)] += merge_sign(1u << ax, m) * x.g[m][ax];
    }
  return r;
}

void jet_axpy(double s, const JetForm& x, JetForm& y) {
  for (unsigned m = 0; m < 16; ++m) {
    y.v[m] += s * x.v[m];
    for (int ax = 0; ax < 4; ++ax) y.g[m][ax] += s * x.g[m][ax];
  }
}

// Trace of a sampled matrix form, scaled: the 1x1 integrand forms below.
LieForm traced(const LieForm& w, cplx s) {
  LieForm out = zero_form_like(*w.grid, w.degree, 1);
  const std::size_t n = w.grid->num_nodes();
  for (int c = 0; c < w.ncomp(); ++c)
    for (std::size_t i = 0; i < n; ++i) out.at(c, i)(0, 0) = s * w.at(c, i).trace();
  return out;
}

}  // namespace

cplx normalization_c(int k) {
  if (k < 0) throw std::invalid_argument("normalization_c: k must be >= 0");
  const cplx base = cplx(0.0, 1.0) / (2.0 * kPi);
  cplx pw = 1.0;
  for (int i = 0; i < k + 2; ++i) pw *= base;
  double fact = 1.0;
  for (int i = 2; i <= k + 2; ++i) fact *= static_cast<double>(i);
  return -pw / (fact * (2.0 * k + 3.0));
}

AffineConnection4 random_affine_connection(const GaugeBasis& basis, SplitMix64& rng,
                                           double amp) {
  auto draw = [&] {
    Mat x = Mat::Zero(basis.p, basis.p);
    for (const Mat& t : basis.tau) x += rng.next_symmetric(amp) * t;
    return x;
  };
  AffineConnection4 c;
  for (int i = 0; i < 4; ++i) c.m[i] = draw();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c.n[i][j] = draw();
  return c;
}

double dcs_identity_check(const AffineConnection4& conn) {
  const int p = static_cast<int>(conn.m[0].rows());
  JetForm a(p);
  for (int i = 0; i < 4; ++i) {
    a.v[1u << i] = conn.m[i];
    for (int j = 0; j < 4; ++j) a.g[1u << i][j] = conn.n[i][j];
  }
  const JetForm da = jet_d(a);
  const JetForm a2 = jet_wedge(a, a);

  JetForm cs = jet_wedge(a, da);            // A dA
  jet_axpy(2.0 / 3.0, jet_wedge(a2, a), cs);  // + 2/3 A^3
  const JetForm dcs = jet_d(cs);

  JetForm f = da;  // F = dA + A^A
  jet_axpy(1.0, a2, f);
  const JetForm ff = jet_wedge(f, f);

  return std::abs(dcs.v[15].trace() - ff.v[15].trace());
}

LieForm cs3_integrand(const ManifoldGrid& g, const OneFormFn& a) {
  const LieForm A = sample1(g, a);
  const LieForm dA = exterior_d(g, a);
  LieForm sum = product_wedge(A, dA);
  sum = add(sum, scale(2.0 / 3.0, product_wedge(product_wedge(A, A), A)));
  return traced(sum, 1.0 / (8.0 * kPi * kPi));
}

LieForm cs5_integrand(const ManifoldGrid& g, const OneFormFn& a) {
  const LieForm A = sample1(g, a);
  const LieForm dA = exterior_d(g, a);
  const LieForm A2 = product_wedge(A, A);
  const LieForm A3 = product_wedge(A2, A);
  LieForm sum = product_wedge(A, product_wedge(dA, dA));
  sum = add(sum, scale(1.5, product_wedge(A3, dA)));
  sum = add(sum, scale(0.6, product_wedge(A3, A2)));
  return traced(sum, cplx(0.0, 1.0) / (24.0 * kPi * kPi * kPi));
}

cplx winding_3(const ManifoldGrid& s3, const MatFnPtr& g) {
  const OneFormPtr om = maurer_cartan(g, /*left=*/true);
  const LieForm w = sample1(s3, *om);
  const LieForm w3 = product_wedge(product_wedge(w, w), w);
  return integrate_top_trace(w3) / (24.0 * kPi * kPi);
}

double distance_to_nearest_integer(cplx value) {
  return std::hypot(value.real() - std::round(value.real()), value.imag());
}

namespace {

// a_phi(theta) = i s (n/2)(1 - s cos theta): s = +1 gives the northern-cap
// potential i(n/2)(1-cos th) dphi, s = -1 the southern -i(n/2)(1+cos th) dphi.
class CapConnection final : public OneFormFn {
 public:
  CapConnection(int n, double s) : n_(n), s_(s) {}
  int rows() const override { return 1; }
  Mat comp(const ManifoldGrid&, const double* c, int i) const override {
    Mat m = Mat::Zero(1, 1);
    if (i == 1) m(0, 0) = cplx(0.0, s_ * 0.5 * n_ * (1.0 - s_ * std::cos(c[0])));
    return m;
  }
  Mat dcomp(const ManifoldGrid&, const double* c, int i, int ax) const override {
    Mat m = Mat::Zero(1, 1);
    if (i == 1 && ax == 0) m(0, 0) = cplx(0.0, 0.5 * n_ * std::sin(c[0]));
    return m;
  }

 private:
  int n_;
  double s_;
};

}  // namespace

MonopoleResult chern1_monopole(int n, int order) {
  const ManifoldGrid north = cap_grid(0.0, kPi / 2.0, order);
  const ManifoldGrid south = cap_grid(kPi / 2.0, kPi, order);
  const CapConnection an(n, 1.0);
  const CapConnection as(n, -1.0);
  const cplx total =
      integrate_top_trace(exterior_d(north, an)) + integrate_top_trace(exterior_d(south, as));

  MonopoleResult r;
  r.chern1 = total / cplx(0.0, 2.0 * kPi);

  // On the equatorial overlap the patches must differ by the pure-gauge
  // one-form of the transition function e^{in phi}: (A_N - A_S)_phi = i n.
  double worst = 0.0;
  const int m = 4 * order;
  for (int k = 0; k < m; ++k) {
    const double c[2] = {kPi / 2.0, 2.0 * kPi * k / m};
    const cplx diff = an.comp(north, c, 1)(0, 0) - as.comp(south, c, 1)(0, 0);
    worst = std::max(worst, std::abs(diff - cplx(0.0, static_cast<double>(n))));
  }
  r.transition_residual = worst;
  return r;
}

TransgressionResult transgression_stokes(const ManifoldGrid& b3, const MatFnPtr& u,
                                         const MatFnPtr& v, const MatFnPtr& w) {
  const ManifoldGrid s2 = boundary_sphere(b3);
  const SampledField ub = sample_field(s2, *u);
  const SampledField vb = sample_field(s2, *v);
  const SampledField wb = sample_field(s2, *w);
  const LieForm br = ungraded_bracket_wedge(vb.d, wb.d);

  TransgressionResult r;
  r.boundary = kC2 * integrate_top_trace(mul0_left(ub.val, br));
  const SampledField ui = sample_field(b3, *u);
  const SampledField vi = sample_field(b3, *v);
  const SampledField wi = sample_field(b3, *w);
  r.bulk = mf_bulk_integral(ui, vi, wi);
  r.residual = std::abs(r.boundary - r.bulk);
  return r;
}

namespace {

// (1 - sum_k e_k^2) * inner; on the B3 chart the cutoff is 1 - r^2, so the
// product vanishes identically on the boundary sphere.
class RadialCutoffField final : public MatFn {
 public:
  explicit RadialCutoffField(MatFnPtr inner) : inner_(std::move(inner)) {}
  int rows() const override { return inner_->rows(); }

  Mat value(const ManifoldGrid& g, const double* c) const override {
    const EmbJet ej = g.embedding_jet(c);
    return cut(ej) * inner_->value(g, c);
  }
  Mat partial(const ManifoldGrid& g, const double* c, int ax) const override {
    const EmbJet ej = g.embedding_jet(c);
    return dcut(ej, ax) * inner_->value(g, c) + cut(ej) * inner_->partial(g, c, ax);
  }
  Mat second(const ManifoldGrid& g, const double* c, int a, int b) const override {
    const EmbJet ej = g.embedding_jet(c);
    return ddcut(ej, a, b) * inner_->value(g, c) + dcut(ej, a) * inner_->partial(g, c, b) +
           dcut(ej, b) * inner_->partial(g, c, a) + cut(ej) * inner_->second(g, c, a, b);
  }
  bool analytic_partials() const override { return inner_->analytic_partials(); }

 private:
  static double cut(const EmbJet& ej) {
    double s = 1.0;
    for (int k = 0; k < ej.m; ++k) s -= ej.v[k] * ej.v[k];
    return s;
  }
  static double dcut(const EmbJet& ej, int a) {
    double s = 0.0;
    for (int k = 0; k < ej.m; ++k) s -= 2.0 * ej.v[k] * ej.d[k][a];
    return s;
  }
  static double ddcut(const EmbJet& ej, int a, int b) {
    double s = 0.0;
    for (int k = 0; k < ej.m; ++k)
      s -= 2.0 * (ej.d[k][a] * ej.d[k][b] + ej.v[k] * ej.dd[k][a][b]);
    return s;
  }

  MatFnPtr inner_;
};

}  // namespace

MatFnPtr radial_cutoff_field(MatFnPtr inner) {
  return std::make_shared<RadialCutoffField>(std::move(inner));
}

}  // namespace anomaly
