#pragma once

#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "anomaly/forms.hpp"

namespace anomaly {

// c2 = i / 24 pi^2, the 3-dimensional current-algebra cocycle normalization.
inline const cplx kC2 = cplx(0.0, 1.0) / (24.0 * std::numbers::pi * std::numbers::pi);

// ---------------------------------------------------------------- Kac-Moody
// kappa(u,v) = k * integral_{S1} tr(u dv): the central 2-cocycle of the loop
// algebra.  km_cocycle_residual is |kappa([u,v],w) + kappa([v,w],u) +
// kappa([w,u],v)| (the 2-cocycle identity; kappa is invariant under the
// coadjoint part, so the Chevalley-Eilenberg sum reduces to this).
cplx kac_moody(const ManifoldGrid& s1, const MatFnPtr& u, const MatFnPtr& v, cplx k_level);
double km_cocycle_residual(const ManifoldGrid& s1, const MatFnPtr& u, const MatFnPtr& v,
                           const MatFnPtr& w, cplx k_level);

// A 0-form sampled together with its differential; the unit the cocycle
// formulas consume.
struct SampledField {
  LieForm val;  // 0-form
  LieForm d;    // 1-form
};

SampledField sample_field(const ManifoldGrid& g, const MatFn& f);
// Pointwise commutator [x,y] with d[x,y] assembled by the Leibniz rule.
SampledField pointwise_comm(const SampledField& x, const SampledField& y);

// ----------------------------------------------------- Mickelsson-Faddeev
// theta2(A; x, y) = c2 * integral tr(A ^ [dx, dy]) with the ungraded bracket
// [dx,dy] = dx^dy - dy^dx (the convention under which theta2(A;x,y) =
// -theta2(A;y,x) holds exactly).
cplx mickelsson_faddeev(const LieForm& a, const SampledField& x, const SampledField& y);

// Six-term Chevalley-Eilenberg coboundary with cyclic argument bookkeeping:
//   (d theta2)(A; u,v,w) = L_u theta2(A;v,w) + L_v theta2(A;w,u)
//                        + L_w theta2(A;u,v) - theta2(A;[u,v],w)
//                        - theta2(A;[w,u],v) - theta2(A;[v,w],u),
// where L_u A = [A,u] + du and L_u theta2(A;v,w) = theta2(L_u A; v,w)
// (theta2 is linear in A).  Vanishes on closed 3-manifolds; on B3 it equals
// three times the bulk integral below, i.e. the boundary term.
cplx lie_coboundary_2(const LieForm& a, const SampledField& u, const SampledField& v,
                      const SampledField& w);

// c2 * integral tr(u[dv,dw] + v[dw,du] + w[du,dv])  (cyclic boundary term;
// on the S2 boundary grid of a B3 chart this equals lie_coboundary_2).
cplx mf_boundary_integral(const SampledField& u, const SampledField& v,
                          const SampledField& w);

// c2 * integral tr(du ^ [dv,dw]); by Stokes this equals the boundary
// integral of tr(u[dv,dw]) and exactly one third of lie_coboundary_2 on B3
// (each cyclic Stokes piece is equal by symmetry of the trace invariant).
cplx mf_bulk_integral(const SampledField& u, const SampledField& v, const SampledField& w);

// ------------------------------------------------------- gauge invariance
// lambda(A; z) = c2 * integral_{S3} tr( A ^ omega ^ [omega,z]
//                                      + [omega,A] ^ dz  -  omega^3 z ),
// with omega = dg g^-1 the right Maurer-Cartan form of the gauge map and
// [omega,A] = omega^A - A^omega the ungraded bracket.  lambda_linear is the
// A-linear part (the omega^3 term drops); the coboundary of lambda only ever
// sees the linear part because L_x acts on the A slot.
cplx lambda_linear(const LieForm& a, const LieForm& omega, const SampledField& z);
cplx lambda_cochain(const LieForm& a, const LieForm& omega, const SampledField& z);

struct InvarianceBreakdown {
  cplx theta;          // theta2(A; x, y)
  cplx theta_g;        // theta2(A^g; x^g, y^g)
  cplx delta_lambda;   // (d lambda)(A; x, y)
  double residual;     // | theta_g - theta + delta_lambda |
  double scale;        // max magnitude among the three terms
};

// Residual of the gauge transformation law theta^g = theta - d lambda,
// evaluated with A^g = g^-1 A g + g^-1 dg and conjugated arguments
// x^g = g^-1 x g.
InvarianceBreakdown invariance_residual(const ManifoldGrid& s3, const OneFormPtr& a,
                                        const MatFnPtr& g, const MatFnPtr& x,
                                        const MatFnPtr& y);

// Calibration over the four sign/orientation conventions for lambda:
// Maurer-Cartan side (right: dg g^-1 / left: g^-1 dg) x sign of the omega^3
// term.  Returns (variant name, residual) pairs; the shipped convention is
// "right-mc,minus-omega3" and is the one invariance_residual uses.
std::vector<std::pair<std::string, double>> lambda_calibration(
    const ManifoldGrid& s3, const OneFormPtr& a, const MatFnPtr& g, const MatFnPtr& x,
    const MatFnPtr& y);

}  // namespace anomaly
