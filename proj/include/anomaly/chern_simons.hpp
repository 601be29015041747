#pragma once

#include <array>

#include "anomaly/cocycles.hpp"
#include "anomaly/forms.hpp"

namespace anomaly {

// c_{2k+1} = -(i/2pi)^{k+2} / ((k+2)! (2k+3)); c_1 = 1/(24 pi^2),
// c_3 = i/(240 pi^3).
cplx normalization_c(int k);

// Affine connection on an R^4 patch: A = sum_i (m[i] + sum_j n[i][j] x^j) dx^i.
struct AffineConnection4 {
  std::array<Mat, 4> m;
  std::array<std::array<Mat, 4>, 4> n;
};

AffineConnection4 random_affine_connection(const GaugeBasis& basis, SplitMix64& rng,
                                           double amp);

// Residual of the exact 4-form identity d tr(A dA + 2/3 A^3) = tr(F ^ F)
// evaluated at the origin by multilinear algebra (all derivatives of an
// affine A are the constants n[i][j]; no grids or differences involved).
double dcs_identity_check(const AffineConnection4& conn);

// CS_3 = (1/8pi^2) tr(A dA + 2/3 A^3) and
// CS_5 = (i/24pi^3) tr(A (dA)^2 + 3/2 A^3 dA + 3/5 A^5), sampled as
// scalar-valued (1x1) forms of degree 3 / 5.
LieForm cs3_integrand(const ManifoldGrid& g, const OneFormFn& a);
LieForm cs5_integrand(const ManifoldGrid& g, const OneFormFn& a);

// (1/24pi^2) * integral_{S3} tr((g^-1 dg)^3).
cplx winding_3(const ManifoldGrid& s3, const MatFnPtr& g);

double distance_to_nearest_integer(cplx value);

// Two-patch abelian monopole: A_N = i(n/2)(1-cos th) dphi on the northern
// cap, A_S = -i(n/2)(1+cos th) dphi on the southern cap, transition e^{in phi}
// on the equator.  Returns (1/2pi i)(int_N tr dA_N + int_S tr dA_S) together
// with the worst-case equator residual |(A_N - A_S)_phi - in| over sampled
// equator points (the transition-function consistency check).
struct MonopoleResult {
  cplx chern1;
  double transition_residual;
};
MonopoleResult chern1_monopole(int n, int order);

// Residual of c2 int_{S2=dB3} tr(u[dv,dw]) - c2 int_{B3} tr(du ^ [dv,dw]).
struct TransgressionResult {
  cplx boundary;
  cplx bulk;
  double residual;
};
TransgressionResult transgression_stokes(const ManifoldGrid& b3, const MatFnPtr& u,
                                         const MatFnPtr& v, const MatFnPtr& w);

// (1 - sum_k e_k(x)^2) * inner: vanishes on the boundary sphere of a B3
// chart (used for the compact-support variant of the Stokes check).
MatFnPtr radial_cutoff_field(MatFnPtr inner);

}  // namespace anomaly
