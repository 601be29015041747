#pragma once

#include <memory>
#include <vector>

#include "anomaly/grid.hpp"
#include "anomaly/liealg.hpp"

namespace anomaly {

// Matrix-valued function of chart coordinates with a 2-jet.  Implementations
// that know analytic partials override partial()/second(); the base class
// falls back to 4th-order central finite differences of the next-lower jet
// level, so every field is differentiable twice either way.
class MatFn {
 public:
  virtual ~MatFn() = default;
  virtual int rows() const = 0;
  virtual Mat value(const ManifoldGrid& g, const double* c) const = 0;
  virtual Mat partial(const ManifoldGrid& g, const double* c, int ax) const;
  virtual Mat second(const ManifoldGrid& g, const double* c, int a, int b) const;
  virtual bool analytic_partials() const { return false; }
};

using MatFnPtr = std::shared_ptr<const MatFn>;

// Degree <= 2 polynomial in the embedding coordinates of the grid, with
// matrix coefficients expanded over a fixed list of constant matrices:
//   F(x) = sum_a [ c0_a + sum_k c1_{a,k} e_k(x) + sum_{k<=l} c2_{a,kl} e_k e_l ] B_a.
// All jets are analytic (chain rule through the embedding jet).
class PolyMatField : public MatFn {
 public:
  PolyMatField(std::vector<Mat> basis, int embed_dim);
  static PolyMatField random(const std::vector<Mat>& basis, int embed_dim,
                             SplitMix64& rng, double amp);

  int rows() const override { return static_cast<int>(basis_[0].rows()); }
  Mat value(const ManifoldGrid& g, const double* c) const override;
  Mat partial(const ManifoldGrid& g, const double* c, int ax) const override;
  Mat second(const ManifoldGrid& g, const double* c, int a, int b) const override;
  bool analytic_partials() const override { return true; }

  double& c0(int a) { return c0_[a]; }
  double& c1(int a, int k) { return c1_[a * m_ + k]; }
  double& c2(int a, int k, int l) { return c2_[(a * m_ + k) * m_ + l]; }

 private:
  void scalar_jet(const EmbJet& ej, int a, double* v, double* dv, double* ddv) const;
  std::vector<Mat> basis_;
  int m_;
  std::vector<double> c0_, c1_, c2_;
};

// Pointwise exponential g = exp(i H) of a Hermitian field H.  First partials
// are analytic (Daleckii-Krein divided differences over the eigenbasis of H);
// second partials fall back to finite differences of the analytic firsts.
class GroupMapField : public MatFn {
 public:
  explicit GroupMapField(MatFnPtr hermitian);
  int rows() const override { return h_->rows(); }
  Mat value(const ManifoldGrid& g, const double* c) const override;
  Mat partial(const ManifoldGrid& g, const double* c, int ax) const override;
  bool analytic_partials() const override { return true; }

 private:
  MatFnPtr h_;
};

// Degree-one winding map S3 -> SU(2): q(x) = x0 sigma0 + i(x1 s1 + x2 s2 + x3 s3)
// in the embedding coordinates; fully analytic jets (linear in the embedding).
class QuaternionMapField : public MatFn {
 public:
  int rows() const override { return 2; }
  Mat value(const ManifoldGrid& g, const double* c) const override;
  Mat partial(const ManifoldGrid& g, const double* c, int ax) const override;
  Mat second(const ManifoldGrid& g, const double* c, int a, int b) const override;
  bool analytic_partials() const override { return true; }
};

// Combinators (jets by linearity / product rule; seconds recurse into
// members, so they stay analytic whenever the members are).
MatFnPtr const_field(const Mat& m);
MatFnPtr sum_field(cplx alpha, MatFnPtr x, cplx beta, MatFnPtr y);
MatFnPtr product_field(MatFnPtr x, MatFnPtr y);
MatFnPtr adjoint_field(MatFnPtr x);
// g^-1 x g for unitary g (adjoint used as the inverse).
MatFnPtr conjugated_field(MatFnPtr g, MatFnPtr x);

// Periodic Gaussian bump on T3 centred at `center` with width sigma, as a
// 1x1 matrix field.  Tails fall below 7e-6 at chart distance 4.9 sigma (the
// effective-localization radius the smearing guard enforces) and below 1e-12
// beyond 7.5 sigma; both smearing routes integrate the same periodic
// envelope over the whole torus, so the tails never bias a cross-check.
class BumpField : public MatFn {
 public:
  BumpField(std::array<double, 3> center, double sigma);
  int rows() const override { return 1; }
  Mat value(const ManifoldGrid& g, const double* c) const override;
  Mat partial(const ManifoldGrid& g, const double* c, int ax) const override;
  Mat second(const ManifoldGrid& g, const double* c, int a, int b) const override;
  bool analytic_partials() const override { return true; }
  double scalar(const double* c) const;
  double scalar_partial(const double* c, int ax) const;
  double sigma() const { return sigma_; }

 private:
  std::array<double, 3> center_;
  double sigma_;
};

// envelope(x) * M with analytic jets.
MatFnPtr bump_times(std::shared_ptr<const BumpField> env, const Mat& m);

// Random Lie-algebra-valued field: degree-2 polynomial in the embedding
// coordinates with coefficients uniform in [-amp, amp] over the given basis.
MatFnPtr random_lie_field(const GaugeBasis& basis, const ManifoldGrid& g,
                          SplitMix64& rng, double amp);
// Random group map exp(i H) with H as above.
MatFnPtr random_group_map(const GaugeBasis& basis, const ManifoldGrid& g,
                          SplitMix64& rng, double amp);

}  // namespace anomaly
