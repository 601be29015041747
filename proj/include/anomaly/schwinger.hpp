#pragma once

#include <array>
#include <memory>

#include "anomaly/cocycles.hpp"
#include "anomaly/fields.hpp"
#include "anomaly/forms.hpp"
#include "anomaly/liealg.hpp"

namespace anomaly {

// Equal-time commutator index cases:
//   1: mu == nu              -> sigma_0 (x) commutator structure
//   2: mu == 0, nu != 0      -> sigma_nu (x) commutator structure
//   3: mu != nu, both != 0   -> i eps_{mu nu eta} sigma_eta (x) anticommutator
struct CurrentCase {
  int case_id = 1;
  int mu = 0;
  int nu = 0;
};

// Derives the case id from (mu, nu); throws on an index combination outside
// the three cases (mu != 0 with nu == 0, or indices outside 0..3).
CurrentCase current_case(int mu, int nu);

// Levi-Civita sign of three integers (0 unless pairwise distinct); index base
// does not matter, only relative order.
double eps3(int i, int j, int k);

// Exact expansion of [sigma_mu (x) tau^a, sigma_nu (x) tau^b] in the tensor
// basis: commutator = i * sum_c gauge_coeff[c] * (sigma_eta (x) tau^c).
// Cases 1-2 carry gauge_coeff[c] = lambda^{ab}_c, case 3 carries
// eps_{mu nu eta} d_{abc}.  matrix_residual is the max-abs deviation of the
// right-hand side from the directly computed commutator; split_deviation is
// the tensor_commutator two-route disagreement.
struct NaiveExpansion {
  int eta = 0;
  Eigen::VectorXd gauge_coeff;
  double matrix_residual = 0.0;
  double split_deviation = 0.0;
};

NaiveExpansion naive_case_commutator(const TensorBasis& tb, const CurrentCase& cc, int a,
                                     int b);

// Coefficient field of the Schwinger term: alpha^{ab}(x,y) =
// sum_k coef[k](x) d_k delta(x - y), with (case 1, eta = 0 / case 2, eta = nu)
//   coef_k(x) = 2 c2 eps_{ijk} tr({tau^a,tau^b} tau^c) d_i A^eta_{j,c}(x)
// and (case 3)
//   coef_k(x) = 2 i c2 eps_{mu nu eta} eps_{ijk} tr([tau^a,tau^b] tau^c)
//               d_i A^eta_{j,c}(x),
// where A^eta_{j,c} = tr((sigma_eta (x) tau^c) A_j) are the tensor
// components of the connection.
struct DeltaCoefficientField {
  const ManifoldGrid* grid = nullptr;
  std::array<Eigen::VectorXcd, 3> coef;
};

DeltaCoefficientField schwinger_local_coefficient(const TensorBasis& tb,
                                                  const ManifoldGrid& chart,
                                                  const OneFormFn& a_tensor,
                                                  const CurrentCase& cc, int a, int b);

// Inputs for the smeared checks: a tensor-valued connection on a flat
// periodic chart plus two scalar envelopes whose declared support balls
// (radius 4.9 sigma) must fit inside a half-period.
struct SchwingerInputs {
  const ManifoldGrid* chart = nullptr;
  OneFormPtr a_tensor;
  std::shared_ptr<const BumpField> u_env;
  std::shared_ptr<const BumpField> v_env;
  TensorBasis basis;
};

// integral integral u(x) alpha^{ab}(x,y) v(y) dx dy with the delta
// derivatives resolved by parts: sum_k int u * coef_k * d_k v.
cplx schwinger_smeared(const SchwingerInputs& inp, const CurrentCase& cc, int a, int b);

// The same smearing against arbitrary scalar (1x1) test functions; exposed
// so linearity in (u, v) can be probed with pointwise combinations.
cplx smear_coefficient_field(const DeltaCoefficientField& coef, const MatFn& u,
                             const MatFn& v);

// theta2(A; u, v) of the Mickelsson-Faddeev cocycle evaluated on the tensor
// algebra with u = u_env * (sigma_mu (x) tau^a), v = v_env * (sigma_nu (x)
// tau^b); the spin traces happen inside the matrix trace.
cplx schwinger_theta2(const SchwingerInputs& inp, const CurrentCase& cc, int a, int b);

struct SchwingerCrossCheck {
  cplx smeared;
  cplx theta2;
  double residual;
};

// The two independent evaluation routes and their disagreement.
SchwingerCrossCheck mf_cross_check(const SchwingerInputs& inp, const CurrentCase& cc,
                                   int a, int b);

// Smeared classic Schwinger term
//   c2 tr({tau^a,tau^b} tau^c) eps_{mu nu eta} d_mu A^c_nu(x) d_eta delta
// for a gauge-only (p x p) connection with components A^c_nu = 2 tr(tau^c
// A_nu); reported alongside the case-1 value for ratio inspection.
cplx classic_eq51(const ManifoldGrid& chart, const OneFormFn& a_gauge,
                  const GaugeBasis& basis, const BumpField& u_env, const BumpField& v_env,
                  int a, int b);

// Random smooth tensor-valued connection: each chart component a polynomial
// in the embedding coordinates over the sigma_mu (x) tau^c basis.
OneFormPtr random_tensor_connection(const TensorBasis& tb, const ManifoldGrid& chart,
                                    SplitMix64& rng, double amp);
// Random unitary tensor-valued map exp(i H); its left Maurer-Cartan form is
// the pure-gauge connection f^-1 df.
MatFnPtr random_tensor_group_map(const TensorBasis& tb, const ManifoldGrid& chart,
                                 SplitMix64& rng, double amp);
// Variant of random_tensor_connection restricted to traceless gauge
// generators (tau^c, c >= 1): strictly su(p)-valued in the gauge factor.
OneFormPtr random_traceless_tensor_connection(const TensorBasis& tb,
                                              const ManifoldGrid& chart, SplitMix64& rng,
                                              double amp);

}  // namespace anomaly
