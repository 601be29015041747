#pragma once

#include <functional>
#include <string>
#include <vector>

#include "anomaly/liealg.hpp"

namespace anomaly {

// Trigonometric-polynomial gauge potential on the circle, Hermitian-valued:
//   A(theta) = mean + sum_{m=1}^{M} ( modes[m-1] e^{i m theta} + h.c. ).
// mean must be Hermitian; each mode matrix is an arbitrary complex p x p.
struct TrigPotential {
  int p = 1;
  Mat mean;
  std::vector<Mat> modes;

  Mat eval(double theta) const;
  Mat derivative(double theta) const;
  // Exact Fourier coefficient hat A_k (zero beyond the mode list).
  Mat fourier(int k) const;

  static TrigPotential constant(const Mat& value);
  static TrigPotential random(int p, int nmodes, SplitMix64& rng, double amp);
};

// D = -i d/dtheta + A on Fourier modes e^{i n theta} (x) C^p, n = -N..N.
// Block (n, k) = delta_{nk} n I_p + hat A_{n-k}; Hermitian by construction,
// verified to 1e-12 at assembly.
struct FourierDirac {
  int ntrunc = 0;
  int p = 1;
  Mat matrix;
};

FourierDirac assemble(const TrigPotential& a, int ntrunc);

// Ascending eigenvalues (the operator is Hermitian).
Eigen::VectorXd spectrum(const FourierDirac& op);

// Midpoint of the spectral gap containing / nearest to `target`: the
// canonical way this toolkit picks non-eigenvalue reference levels.
double nearest_gap_midpoint(const Eigen::VectorXd& spec, double target);

// Dimensions of the truncated eigenspaces below/above a non-eigenvalue.
struct SpectralSlice {
  double lambda_ref = 0.0;
  int dim_below = 0;
  int dim_above = 0;
};

// Throws if lambda_ref is within gap_tol of the spectrum.
SpectralSlice slice_at(const FourierDirac& op, double lambda_ref, double gap_tol);

// dim V_(lambda,eta) + dim V_(eta,mu) = dim V_(lambda,mu) with dimensions
// counted inside the truncation window; exact integer bookkeeping.
struct DetCocycleReport {
  int dim_lo = 0;    // eigenvalues in (lambda, eta)
  int dim_hi = 0;    // eigenvalues in (eta, mu)
  int dim_full = 0;  // eigenvalues in (lambda, mu)
  bool additive = false;
};

DetCocycleReport det_dimension_cocycle(const FourierDirac& op, double lambda, double eta,
                                       double mu, double gap_tol);

// Signed count of eigenvalue crossings of lambda_ref along a potential path,
// as differences of below-counts at adaptively refined path nodes.  An
// interval is accepted once the sorted-spectrum displacement across it is
// below 0.45 x the smaller endpoint spectral gap (sorted matching then being
// unambiguous); exact degeneracies are treated as one branch.
struct FlowResult {
  int flow = 0;
  int diagonalizations = 0;
  bool ok = true;
  std::string message;
};

FlowResult spectral_flow(const std::function<TrigPotential(double)>& path, int ntrunc,
                         double lambda_ref, int steps, double gap_tol = 1e-9,
                         int max_depth = 24);

// Spectral comparison of D_A and D_{A^g} for p = 1 gauge maps
// g = exp(i(phi(theta) + w theta)): A^g = A - phi' - w.  dphi is the winding
// free part phi' (a mean-zero potential); returns the sup distance between
// the sorted central-window spectra (window |lambda - mean A| <= N/2 + 0.499,
// identical as sets for every winding).
double gauge_covariance_residual(const TrigPotential& a, const TrigPotential& dphi,
                                 int winding, int ntrunc);

}  // namespace anomaly
