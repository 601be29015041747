#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "anomaly/common.hpp"

namespace anomaly {

using Mat = Eigen::MatrixXcd;

enum class AlgebraKind { su, u };

// Element of su(p) or u(p) in the physicist convention: Hermitian matrix
// together with its real coefficients over the orthonormal basis below.
struct AlgebraElement {
  Mat matrix;
  Eigen::VectorXd coeff;
};

// Generalized Gell-Mann basis, halved: Hermitian tau^a with
// tr(tau^a tau^b) = delta^{ab}/2.  For p = 3, kind su this reproduces the
// standard lambda/2 matrices in the standard order.  For kind u a leading
// tau^0 = I/sqrt(2p) is prepended.
struct GaugeBasis {
  int p = 0;
  AlgebraKind kind = AlgebraKind::su;
  std::vector<Mat> tau;

  int dim() const { return static_cast<int>(tau.size()); }
  // Real coefficients of a (Hermitian) matrix: c_a = 2 tr(tau^a X).
  Eigen::VectorXd coefficients(const Mat& x) const;
  Mat realize(const Eigen::VectorXd& coeff) const;
};

GaugeBasis build_gauge_basis(int p, AlgebraKind kind);

// lambda^{ab}_c = -2i tr([tau^a,tau^b] tau^c)   (totally antisymmetric, real)
// d_{abc}      =  2 tr({tau^a,tau^b} tau^c)    (totally symmetric, real)
// The d normalization is the closure one: {tau^a,tau^b} = delta_ab I/p + d_abc tau^c
// for su(p), and {tau^a,tau^b} = d_abc tau^c exactly for u(p).
struct StructureConstants {
  int dim = 0;
  std::vector<double> lambda;
  std::vector<double> dsym;

  double lam(int a, int b, int c) const { return lambda[(a * dim + b) * dim + c]; }
  double d(int a, int b, int c) const { return dsym[(a * dim + b) * dim + c]; }
};

StructureConstants structure_constants(const GaugeBasis& basis);

// Pauli basis sigma^0..sigma^3 (sigma^0 = I).
struct SpinBasis {
  std::array<Mat, 4> sigma;
  static SpinBasis standard();
};

// Element of the spin x gauge tensor algebra: coefficients x^{mu a} over the
// orthonormal products sigma^mu (x) tau^a (gauge basis always u(p), so the
// products span all of gl(2p)), plus the realized 2p x 2p matrix.
struct TensorElement {
  Eigen::MatrixXcd coeff;  // 4 x gdim
  Mat matrix;              // 2p x 2p
};

struct TensorBasis {
  GaugeBasis gauge;  // u(p)
  SpinBasis spin;

  static TensorBasis build(int p);
  int p() const { return gauge.p; }
  int gdim() const { return gauge.dim(); }
  Mat element(int mu, int a) const;  // sigma^mu (x) tau^a
  Mat realize(const Eigen::MatrixXcd& coeff) const;
  TensorElement decompose(const Mat& x) const;
};

// Commutator in the realized matrix algebra together with the split form
// [s (x) t, s' (x) t'] = [s,s'] (x) (t t') + (s' s) (x) [t,t'] evaluated
// term by term over the coefficient expansion.  Returns the direct matrix
// commutator; *split_deviation (if non-null) receives the max-abs entry
// difference between the two routes.
Mat tensor_commutator(const TensorBasis& basis, const TensorElement& x,
                      const TensorElement& y, double* split_deviation = nullptr);

AlgebraElement random_algebra_element(const GaugeBasis& basis, SplitMix64& rng, double amp);

}  // namespace anomaly
