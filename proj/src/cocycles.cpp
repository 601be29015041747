#include "anomaly/cocycles.hpp"

namespace anomaly {

cplx kac_moody(const ManifoldGrid& s1, const MatFnPtr& u, const MatFnPtr& v, cplx k_level) {
  const LieForm u0 = sample0(s1, *u);
  const LieForm dv = exterior_d(s1, *v);
  return k_level * integrate_top_trace(mul0_left(u0, dv));
}

double km_cocycle_residual(const ManifoldGrid& s1, const MatFnPtr& u, const MatFnPtr& v,
                           const MatFnPtr& w, cplx k_level) {
  auto comm = [](const MatFnPtr& x, const MatFnPtr& y) {
    return sum_field(1.0, product_field(x, y), -1.0, product_field(y, x));
  };
  const cplx total = kac_moody(s1, comm(u, v), w, k_level) +
                     kac_moody(s1, comm(v, w), u, k_level) +
                     kac_moody(s1, comm(w, u), v, k_level);
  return std::abs(total);
}

SampledField sample_field(const ManifoldGrid& g, const MatFn& f) {
  return {sample0(g, f), exterior_d(g, f)};
}

SampledField pointwise_comm(const SampledField& x, const SampledField& y) {
  SampledField out;
  out.val = sub(mul0_left(x.val, y.val), mul0_left(y.val, x.val));
  // d[x,y] = [dx, y] + [x, dy] componentwise.
  out.d = add(sub(mul0_right(x.d, y.val), mul0_left(y.val, x.d)),
              sub(mul0_left(x.val, y.d), mul0_right(y.d, x.val)));
  return out;
}

cplx mickelsson_faddeev(const LieForm& a, const SampledField& x, const SampledField& y) {
  return kC2 * integrate_top_trace(product_wedge(a, ungraded_bracket_wedge(x.d, y.d)));
}

namespace {

// L_u A = [A, u] + du.
LieForm lie_derivative_connection(const LieForm& a, const SampledField& u) {
  return add(sub(mul0_right(a, u.val), mul0_left(u.val, a)), u.d);
}

}  // namespace

cplx lie_coboundary_2(const LieForm& a, const SampledField& u, const SampledField& v,
                      const SampledField& w) {
  const cplx lie_terms = mickelsson_faddeev(lie_derivative_connection(a, u), v, w) +
                         mickelsson_faddeev(lie_derivative_connection(a, v), w, u) +
                         mickelsson_faddeev(lie_derivative_connection(a, w), u, v);
  const cplx bracket_terms = mickelsson_faddeev(a, pointwise_comm(u, v), w) +
                             mickelsson_faddeev(a, pointwise_comm(w, u), v) +
                             mickelsson_faddeev(a, pointwise_comm(v, w), u);
  return lie_terms - bracket_terms;
}

cplx mf_boundary_integral(const SampledField& u, const SampledField& v,
                          const SampledField& w) {
  const LieForm t1 = mul0_left(u.val, ungraded_bracket_wedge(v.d, w.d));
  const LieForm t2 = mul0_left(v.val, ungraded_bracket_wedge(w.d, u.d));
  const LieForm t3 = mul0_left(w.val, ungraded_bracket_wedge(u.d, v.d));
  return kC2 * integrate_top_trace(add(add(t1, t2), t3));
}

cplx mf_bulk_integral(const SampledField& u, const SampledField& v, const SampledField& w) {
  return kC2 * integrate_top_trace(product_wedge(u.d, ungraded_bracket_wedge(v.d, w.d)));
}

namespace {

cplx lambda_impl(const LieForm& a, const LieForm& omega, const SampledField& z,
                 bool include_omega3, double omega3_sign) {
  // tr(A omega [omega,z]): [omega,z] is the pointwise commutator of the
  // 1-form components with the 0-form z.
  const LieForm omega_z = sub(mul0_right(omega, z.val), mul0_left(z.val, omega));
  const LieForm t1 = product_wedge(a, product_wedge(omega, omega_z));
  const LieForm t2 = product_wedge(ungraded_bracket_wedge(omega, a), z.d);
  LieForm total = add(t1, t2);
  if (include_omega3) {
    const LieForm om3z =
        mul0_right(product_wedge(omega, product_wedge(omega, omega)), z.val);
    total = add(total, scale(omega3_sign, om3z));
  }
  return kC2 * integrate_top_trace(total);
}

}  // namespace

cplx lambda_linear(const LieForm& a, const LieForm& omega, const SampledField& z) {
  return lambda_impl(a, omega, z, false, 0.0);
}

cplx lambda_cochain(const LieForm& a, const LieForm& omega, const SampledField& z) {
  return lambda_impl(a, omega, z, true, -1.0);
}

namespace {

// (d lambda)(A; x, y) = L_x lambda(A; y) - L_y lambda(A; x) - lambda(A; [x,y]).
// L_x acts on the connection slot, so only the A-linear part contributes to
// the first two terms; omega3_sign controls the convention under test.
cplx delta_lambda(const LieForm& a, const LieForm& omega, const SampledField& x,
                  const SampledField& y, double omega3_sign) {
  const cplx lx = lambda_linear(lie_derivative_connection(a, x), omega, y);
  const cplx ly = lambda_linear(lie_derivative_connection(a, y), omega, x);
  const cplx lc = lambda_impl(a, omega, pointwise_comm(x, y), true, omega3_sign);
  return lx - ly - lc;
}

InvarianceBreakdown invariance_impl(const ManifoldGrid& s3, const OneFormPtr& a,
                                    const MatFnPtr& g, const MatFnPtr& x, const MatFnPtr& y,
                                    bool right_mc, double omega3_sign) {
  const LieForm a1 = sample1(s3, *a);
  const SampledField xs = sample_field(s3, *x);
  const SampledField ys = sample_field(s3, *y);
  const LieForm ag = sample1(s3, *gauge_transformed(a, g));
  const SampledField xg = sample_field(s3, *conjugated_field(g, x));
  const SampledField yg = sample_field(s3, *conjugated_field(g, y));
  const LieForm omega = sample1(s3, *maurer_cartan(g, !right_mc));

  InvarianceBreakdown out;
  out.theta = mickelsson_faddeev(a1, xs, ys);
  out.theta_g = mickelsson_faddeev(ag, xg, yg);
  out.delta_lambda = delta_lambda(a1, omega, xs, ys, omega3_sign);
  out.residual = std::abs(out.theta_g - out.theta + out.delta_lambda);
  out.scale = std::max({std::abs(out.theta), std::abs(out.theta_g), std::abs(out.delta_lambda)});
  return out;
}

}  // namespace

InvarianceBreakdown invariance_residual(const ManifoldGrid& s3, const OneFormPtr& a,
                                        const MatFnPtr& g, const MatFnPtr& x,
                                        const MatFnPtr& y) {
  return invariance_impl(s3, a, g, x, y, /*right_mc=*/true, /*omega3_sign=*/-1.0);
}

std::vector<std::pair<std::string, double>> lambda_calibration(
    const ManifoldGrid& s3, const OneFormPtr& a, const MatFnPtr& g, const MatFnPtr& x,
    const MatFnPtr& y) {
  std::vector<std::pair<std::string, double>> out;
  for (bool right : {true, false})
    for (double sign : {-1.0, 1.0}) {
      const auto r = invariance_impl(s3, a, g, x, y, right, sign);
      std::string name = std::string(right ? "right-mc" : "left-mc") + "," +
                         (sign < 0 ? "minus-omega3" : "plus-omega3");
      out.emplace_back(std::move(name), r.residual);
    }
  return out;
}

}  // namespace anomaly
