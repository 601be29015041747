#include "anomaly/schwinger.hpp"

#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

namespace anomaly {

namespace {

constexpr double kPi = std::numbers::pi;

void check_gauge_index(const TensorBasis& tb, int a) {
  if (a < 0 || a >= tb.gdim())
    throw std::invalid_argument("schwinger: gauge index out of range");
}

// sigma_eta (x) K for the component-extraction traces.
Mat spin_gauge(const TensorBasis& tb, int eta, const Mat& k) {
  return Eigen::kroneckerProduct(tb.spin.sigma[eta], k).eval();
}

}  // namespace

CurrentCase current_case(int mu, int nu) {
  if (mu < 0 || mu > 3 || nu < 0 || nu > 3)
    throw std::invalid_argument("schwinger: spin index out of range");
  CurrentCase cc;
  cc.mu = mu;
  cc.nu = nu;
  if (mu == nu)
    cc.case_id = 1;
  else if (mu == 0)
    cc.case_id = 2;
  else if (nu != 0)
    cc.case_id = 3;
  else
    throw std::invalid_argument("schwinger: invalid index combination (mu != 0, nu == 0)");
  return cc;
}

double eps3(int i, int j, int k) {
  const int p = (j - i) * (k - i) * (k - j);
  if (p == 0) return 0.0;
  return p > 0 ? 1.0 : -1.0;
}

NaiveExpansion naive_case_commutator(const TensorBasis& tb, const CurrentCase& cc, int a,
                                     int b) {
  check_gauge_index(tb, a);
  check_gauge_index(tb, b);
  const CurrentCase valid = current_case(cc.mu, cc.nu);
  if (valid.case_id != cc.case_id)
    throw std::invalid_argument("schwinger: case_id inconsistent with (mu, nu)");

  const int n = tb.gdim();
  TensorElement x = tb.decompose(tb.element(cc.mu, a));
  TensorElement y = tb.decompose(tb.element(cc.nu, b));
  NaiveExpansion out;
  const Mat comm = tensor_commutator(tb, x, y, &out.split_deviation);

  const StructureConstants sc = structure_constants(tb.gauge);
  out.gauge_coeff = Eigen::VectorXd::Zero(n);
  if (cc.case_id == 1 || cc.case_id == 2) {
    out.eta = (cc.case_id == 1) ? 0 : cc.nu;
    for (int c = 0; c < n; ++c) out.gauge_coeff[c] = sc.lam(a, b, c);
  } else {
    for (int e = 1; e <= 3; ++e)
      if (eps3(cc.mu, cc.nu, e) != 0.0) out.eta = e;
    const double sgn = eps3(cc.mu, cc.nu, out.eta);
    for (int c = 0; c < n; ++c) out.gauge_coeff[c] = sgn * sc.d(a, b, c);
  }

  Mat predicted = Mat::Zero(comm.rows(), comm.cols());
  for (int c = 0; c < n; ++c)
    predicted += cplx(0.0, out.gauge_coeff[c]) * tb.element(out.eta, c);
  out.matrix_residual = (comm - predicted).cwiseAbs().maxCoeff();
  return out;
}

DeltaCoefficientField schwinger_local_coefficient(const TensorBasis& tb,
                                                  const ManifoldGrid& chart,
                                                  const OneFormFn& a_tensor,
                                                  const CurrentCase& cc, int a, int b) {
  check_gauge_index(tb, a);
  check_gauge_index(tb, b);
  if (chart.dim != 3)
    throw std::invalid_argument("schwinger: local coefficients need a 3-d chart");
  const CurrentCase valid = current_case(cc.mu, cc.nu);
  if (valid.case_id != cc.case_id)
    throw std::invalid_argument("schwinger: case_id inconsistent with (mu, nu)");

  const Mat& ta = tb.gauge.tau[a];
  const Mat& tb_mat = tb.gauge.tau[b];

  // Component sums collapse to single traces: for K = sum_c w_c tau^c,
  // sum_c w_c A^eta_{j,c} = tr((sigma_eta (x) K) A_j); anticommutator halves
  // give w_c = tr({tau^a,tau^b} tau^c), commutator halves w_c =
  // tr([tau^a,tau^b] tau^c).
  Mat weight;
  cplx prefactor;
  if (cc.case_id == 3) {
    int eta = 0;
    for (int e = 1; e <= 3; ++e)
      if (eps3(cc.mu, cc.nu, e) != 0.0) eta = e;
    const Mat k = 0.5 * (ta * tb_mat - tb_mat * ta);
    weight = spin_gauge(tb, eta, k);
    prefactor = 2.0 * cplx(0.0, 1.0) * kC2 * eps3(cc.mu, cc.nu, eta);
  } else {
    const int eta = (cc.case_id == 1) ? 0 : cc.nu;
    const Mat k = 0.5 * (ta * tb_mat + tb_mat * ta);
    weight = spin_gauge(tb, eta, k);
    prefactor = 2.0 * kC2;
  }

  DeltaCoefficientField out;
  out.grid = &chart;
  const std::size_t nn = chart.num_nodes();
  for (auto& v : out.coef) v = Eigen::VectorXcd::Zero(nn);

  parallel_for(nn, [&](std::size_t node) {
    const auto c = chart.coords(node);
    Mat da[3][3];
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) da[i][j] = a_tensor.dcomp(chart, c.data(), j, i);
    for (int k = 0; k < 3; ++k) {
      cplx acc = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const double e = eps3(i, j, k);
          if (e != 0.0) acc += e * (weight * da[i][j]).trace();
        }
      out.coef[k](node) = prefactor * acc;
    }
  });
  return out;
}

cplx smear_coefficient_field(const DeltaCoefficientField& coef, const MatFn& u,
                             const MatFn& v) {
  if (coef.grid == nullptr) throw std::invalid_argument("schwinger: coefficient field unset");
  if (u.rows() != 1 || v.rows() != 1)
    throw std::invalid_argument("schwinger: test functions must be scalar (1x1)");
  const ManifoldGrid& g = *coef.grid;
  return reduce_sum_cplx(g.num_nodes(), [&](std::size_t node) {
    const auto c = g.coords(node);
    const cplx uu = u.value(g, c.data())(0, 0);
    cplx s = 0.0;
    for (int k = 0; k < 3; ++k) s += coef.coef[k](node) * v.partial(g, c.data(), k)(0, 0);
    return g.coord_weight(node) * uu * s;
  });
}

cplx schwinger_smeared(const SchwingerInputs& inp, const CurrentCase& cc, int a, int b) {
  if (inp.chart == nullptr || !inp.a_tensor || !inp.u_env || !inp.v_env)
    throw std::invalid_argument("schwinger: incomplete inputs");
  if (4.9 * inp.u_env->sigma() > kPi || 4.9 * inp.v_env->sigma() > kPi)
    throw std::invalid_argument("schwinger: envelope support exceeds the chart ball");

  const DeltaCoefficientField coef =
      schwinger_local_coefficient(inp.basis, *inp.chart, *inp.a_tensor, cc, a, b);
  return smear_coefficient_field(coef, *inp.u_env, *inp.v_env);
}

cplx schwinger_theta2(const SchwingerInputs& inp, const CurrentCase& cc, int a, int b) {
  const CurrentCase valid = current_case(cc.mu, cc.nu);
  if (valid.case_id != cc.case_id)
    throw std::invalid_argument("schwinger: case_id inconsistent with (mu, nu)");
  const ManifoldGrid& g = *inp.chart;
  const MatFnPtr x = bump_times(inp.u_env, inp.basis.element(cc.mu, a));
  const MatFnPtr y = bump_times(inp.v_env, inp.basis.element(cc.nu, b));
  const LieForm af = sample1(g, *inp.a_tensor);
  return mickelsson_faddeev(af, sample_field(g, *x), sample_field(g, *y));
}

SchwingerCrossCheck mf_cross_check(const SchwingerInputs& inp, const CurrentCase& cc,
                                   int a, int b) {
  SchwingerCrossCheck out;
  out.smeared = schwinger_smeared(inp, cc, a, b);
  out.theta2 = schwinger_theta2(inp, cc, a, b);
  out.residual = std::abs(out.smeared - out.theta2);
  return out;
}

cplx classic_eq51(const ManifoldGrid& chart, const OneFormFn& a_gauge,
                  const GaugeBasis& basis, const BumpField& u_env, const BumpField& v_env,
                  int a, int b) {
  if (chart.dim != 3) throw std::invalid_argument("schwinger: eq51 needs a 3-d chart");
  if (a < 0 || a >= basis.dim() || b < 0 || b >= basis.dim())
    throw std::invalid_argument("schwinger: gauge index out of range");
  // sum_c tr({tau^a,tau^b} tau^c) A^c_nu = tr({tau^a,tau^b} A_nu) for the
  // gauge-coefficient convention A^c_nu = 2 tr(tau^c A_nu).
  const Mat anti = basis.tau[a] * basis.tau[b] + basis.tau[b] * basis.tau[a];

  const std::size_t nn = chart.num_nodes();
  std::array<Eigen::VectorXcd, 3> coef;
  for (auto& v : coef) v = Eigen::VectorXcd::Zero(nn);
  parallel_for(nn, [&](std::size_t node) {
    const auto c = chart.coords(node);
    Mat da[3][3];
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) da[i][j] = a_gauge.dcomp(chart, c.data(), j, i);
    for (int eta = 0; eta < 3; ++eta) {
      cplx acc = 0.0;
      for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n) {
          const double e = eps3(m, n, eta);
          if (e != 0.0) acc += e * (anti * da[m][n]).trace();
        }
      coef[eta](node) = kC2 * acc;
    }
  });

  return reduce_sum_cplx(nn, [&](std::size_t node) {
    const auto c = chart.coords(node);
    const double u = u_env.scalar(c.data());
    cplx s = 0.0;
    for (int eta = 0; eta < 3; ++eta)
      s += coef[eta](node) * v_env.scalar_partial(c.data(), eta);
    return chart.coord_weight(node) * u * s;
  });
}

namespace {

std::vector<Mat> tensor_matrices(const TensorBasis& tb, bool traceless_only) {
  std::vector<Mat> mats;
  for (int mu = 0; mu < 4; ++mu)
    for (int c = traceless_only ? 1 : 0; c < tb.gdim(); ++c)
      mats.push_back(tb.element(mu, c));
  return mats;
}

OneFormPtr random_connection_over(const std::vector<Mat>& mats, const ManifoldGrid& chart,
                                  SplitMix64& rng, double amp) {
  std::vector<MatFnPtr> comps;
  for (int k = 0; k < chart.dim; ++k)
    comps.push_back(std::make_shared<PolyMatField>(
        PolyMatField::random(mats, chart.embed_dim(), rng, amp)));
  return component_form(std::move(comps));
}

}  // namespace

OneFormPtr random_tensor_connection(const TensorBasis& tb, const ManifoldGrid& chart,
                                    SplitMix64& rng, double amp) {
  return random_connection_over(tensor_matrices(tb, false), chart, rng, amp);
}

OneFormPtr random_traceless_tensor_connection(const TensorBasis& tb,
                                              const ManifoldGrid& chart, SplitMix64& rng,
                                              double amp) {
  return random_connection_over(tensor_matrices(tb, true), chart, rng, amp);
}

MatFnPtr random_tensor_group_map(const TensorBasis& tb, const ManifoldGrid& chart,
                                 SplitMix64& rng, double amp) {
  auto h = std::make_shared<PolyMatField>(
      PolyMatField::random(tensor_matrices(tb, false), chart.embed_dim(), rng, amp));
  return std::make_shared<GroupMapField>(h);
}

}  // namespace anomaly
