#include "anomaly/fields.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anomaly {

namespace {
// Central 4th-order finite-difference step; fields here vary on O(1) chart
// scales, so a fixed step keeps truncation ~1e-8 and rounding ~1e-14.
constexpr double kFdStep = 1e-2;
}  // namespace

Mat MatFn::partial(const ManifoldGrid& g, const double* c, int ax) const {
  double s[kMaxDim];
  for (int i = 0; i < g.dim; ++i) s[i] = c[i];
  auto at = [&](double off) {
    s[ax] = c[ax] + off;
    Mat v = value(g, s);
    s[ax] = c[ax];
    return v;
  };
  return (at(-2 * kFdStep) - 8.0 * at(-kFdStep) + 8.0 * at(kFdStep) - at(2 * kFdStep)) /
         (12.0 * kFdStep);
}

Mat MatFn::second(const ManifoldGrid& g, const double* c, int a, int b) const {
  double s[kMaxDim];
  for (int i = 0; i < g.dim; ++i) s[i] = c[i];
  auto at = [&](double off) {
    s[b] = c[b] + off;
    Mat v = partial(g, s, a);
    s[b] = c[b];
    return v;
  };
  return (at(-2 * kFdStep) - 8.0 * at(-kFdStep) + 8.0 * at(kFdStep) - at(2 * kFdStep)) /
         (12.0 * kFdStep);
}

PolyMatField::PolyMatField(std::vector<Mat> basis, int embed_dim)
    : basis_(std::move(basis)), m_(embed_dim) {
  if (basis_.empty()) throw std::invalid_argument("PolyMatField: empty basis");
  const auto nb = basis_.size();
  c0_.assign(nb, 0.0);
  c1_.assign(nb * m_, 0.0);
  c2_.assign(nb * m_ * m_, 0.0);
}

PolyMatField PolyMatField::random(const std::vector<Mat>& basis, int embed_dim,
                                  SplitMix64& rng, double amp) {
  PolyMatField f(basis, embed_dim);
  const int nb = static_cast<int>(basis.size());
  for (int a = 0; a < nb; ++a) {
    f.c0(a) = rng.next_symmetric(amp);
    for (int k = 0; k < embed_dim; ++k) f.c1(a, k) = rng.next_symmetric(amp);
    for (int k = 0; k < embed_dim; ++k)
      for (int l = k; l < embed_dim; ++l) f.c2(a, k, l) = rng.next_symmetric(amp);
  }
  return f;
}

void PolyMatField::scalar_jet(const EmbJet& ej, int a, double* v, double* dv,
                              double* ddv) const {
  // s = c0 + sum_k c1_k e_k + sum_{k<=l} c2_{kl} e_k e_l
  double s = c0_[a];
  double ds_de[kMaxEmbed];
  for (int k = 0; k < m_; ++k) ds_de[k] = c1_[a * m_ + k];
  for (int k = 0; k < m_; ++k)
    for (int l = k; l < m_; ++l) {
      const double c = c2_[(a * m_ + k) * m_ + l];
      if (c == 0.0) continue;
      s += c * ej.v[k] * ej.v[l];
      ds_de[k] += c * ej.v[l];
      ds_de[l] += c * ej.v[k];
    }
  for (int k = 0; k < m_; ++k) s += c1_[a * m_ + k] * ej.v[k];
  *v = s;
  if (!dv) return;
  for (int i = 0; i < ej.dim; ++i) {
    double di = 0.0;
    for (int k = 0; k < m_; ++k) di += ds_de[k] * ej.d[k][i];
    dv[i] = di;
  }
  if (!ddv) return;
  for (int i = 0; i < ej.dim; ++i)
    for (int j = 0; j < ej.dim; ++j) {
      double dd = 0.0;
      for (int k = 0; k < m_; ++k) dd += ds_de[k] * ej.dd[k][i][j];
      for (int k = 0; k < m_; ++k)
        for (int l = k; l < m_; ++l) {
          const double c = c2_[(a * m_ + k) * m_ + l];
          if (c == 0.0) continue;
          dd += c * (ej.d[k][i] * ej.d[l][j] + ej.d[l][i] * ej.d[k][j]);
        }
      ddv[i * ej.dim + j] = dd;
    }
}

Mat PolyMatField::value(const ManifoldGrid& g, const double* c) const {
  const EmbJet ej = g.embedding_jet(c);
  Mat out = Mat::Zero(rows(), rows());
  for (std::size_t a = 0; a < basis_.size(); ++a) {
    double v;
    scalar_jet(ej, static_cast<int>(a), &v, nullptr, nullptr);
    out += v * basis_[a];
  }
  return out;
}

Mat PolyMatField::partial(const ManifoldGrid& g, const double* c, int ax) const {
  const EmbJet ej = g.embedding_jet(c);
  Mat out = Mat::Zero(rows(), rows());
  double v, dv[kMaxDim];
  for (std::size_t a = 0; a < basis_.size(); ++a) {
    scalar_jet(ej, static_cast<int>(a), &v, dv, nullptr);
    out += dv[ax] * basis_[a];
  }
  return out;
}

Mat PolyMatField::second(const ManifoldGrid& g, const double* c, int a, int b) const {
  const EmbJet ej = g.embedding_jet(c);
  Mat out = Mat::Zero(rows(), rows());
  double v, dv[kMaxDim], ddv[kMaxDim * kMaxDim];
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    scalar_jet(ej, static_cast<int>(k), &v, dv, ddv);
    out += ddv[a * ej.dim + b] * basis_[k];
  }
  return out;
}

GroupMapField::GroupMapField(MatFnPtr hermitian) : h_(std::move(hermitian)) {}

namespace {
// sin(x)/x, stable near zero.
double sinc(double x) {
  if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}
}  // namespace

Mat GroupMapField::value(const ManifoldGrid& g, const double* c) const {
  Eigen::SelfAdjointEigenSolver<Mat> es(h_->value(g, c));
  const Eigen::VectorXd lam = es.eigenvalues();
  Eigen::VectorXcd phase(lam.size());
  for (int k = 0; k < lam.size(); ++k) phase[k] = std::polar(1.0, lam[k]);
  return es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
}

Mat GroupMapField::partial(const ManifoldGrid& g, const double* c, int ax) const {
  // Daleckii-Krein: with H = U diag(lam) U*, dH~ = U* dH U,
  // (d exp(iH))~_{kl} = f[lam_k, lam_l] dH~_{kl},
  // f[a,b] = (e^{ia} - e^{ib})/(a - b) = i e^{i(a+b)/2} sinc((a-b)/2).
  Eigen::SelfAdjointEigenSolver<Mat> es(h_->value(g, c));
  const Eigen::VectorXd lam = es.eigenvalues();
  const Mat& U = es.eigenvectors();
  const Mat dh = U.adjoint() * h_->partial(g, c, ax) * U;
  const int n = static_cast<int>(lam.size());
  Mat out(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      const cplx f = cplx(0, 1) * std::polar(1.0, 0.5 * (lam[k] + lam[l])) *
                     sinc(0.5 * (lam[k] - lam[l]));
      out(k, l) = f * dh(k, l);
    }
  return U * out * U.adjoint();
}

Mat QuaternionMapField::value(const ManifoldGrid& g, const double* c) const {
  const EmbJet ej = g.embedding_jet(c);
  const SpinBasis s = SpinBasis::standard();
  Mat q = ej.v[0] * s.sigma[0];
  for (int k = 1; k < 4; ++k) q += cplx(0, 1) * ej.v[k] * s.sigma[k];
  return q;
}

Mat QuaternionMapField::partial(const ManifoldGrid& g, const double* c, int ax) const {
  const EmbJet ej = g.embedding_jet(c);
  const SpinBasis s = SpinBasis::standard();
  Mat q = ej.d[0][ax] * s.sigma[0];
  for (int k = 1; k < 4; ++k) q += cplx(0, 1) * ej.d[k][ax] * s.sigma[k];
  return q;
}

Mat QuaternionMapField::second(const ManifoldGrid& g, const double* c, int a, int b) const {
  const EmbJet ej = g.embedding_jet(c);
  const SpinBasis s = SpinBasis::standard();
  Mat q = ej.dd[0][a][b] * s.sigma[0];
  for (int k = 1; k < 4; ++k) q += cplx(0, 1) * ej.dd[k][a][b] * s.sigma[k];
  return q;
}

namespace {

class ConstField : public MatFn {
 public:
  explicit ConstField(Mat m) : m_(std::move(m)) {}
  int rows() const override { return static_cast<int>(m_.rows()); }
  Mat value(const ManifoldGrid&, const double*) const override { return m_; }
  Mat partial(const ManifoldGrid&, const double*, int) const override {
    return Mat::Zero(m_.rows(), m_.cols());
  }
  Mat second(const ManifoldGrid&, const double*, int, int) const override {
    return Mat::Zero(m_.rows(), m_.cols());
  }
  bool analytic_partials() const override { return true; }

 private:
  Mat m_;
};

class SumField : public MatFn {
 public:
  SumField(cplx a, MatFnPtr x, cplx b, MatFnPtr y)
      : a_(a), b_(b), x_(std::move(x)), y_(std::move(y)) {}
  int rows() const override { return x_->rows(); }
  Mat value(const ManifoldGrid& g, const double* c) const override {
    return a_ * x_->value(g, c) + b_ * y_->value(g, c);
  }
  Mat partial(const ManifoldGrid& g, const double* c, int ax) const override {
    return a_ * x_->partial(g, c, ax) + b_ * y_->partial(g, c, ax);
  }
  Mat second(const ManifoldGrid& g, const double* c, int i, int j) const override {
    return a_ * x_->second(g, c, i, j) + b_ * y_->second(g, c, i, j);
  }
  bool analytic_partials() const override {
    return x_->analytic_partials() && y_->analytic_partials();
  }

 private:
  cplx a_, b_;
  MatFnPtr x_, y_;
};

class ProductField : public MatFn {
 public:
  ProductField(MatFnPtr x, MatFnPtr y) : x_(std::move(x)), y_(std::move(y)) {}
  int rows() const override { return x_->rows(); }
  Mat value(const ManifoldGrid& g, const double* c) const override {
    return x_->value(g, c) * y_->value(g, c);
  }
  Mat partial(const ManifoldGrid& g, const double* c, int ax) const override {
    return x_->partial(g, c, ax) * y_->value(g, c) + x_->value(g, c) * y_->partial(g, c, ax);
  }
  Mat second(const ManifoldGrid& g, const double* c, int i, int j) const override {
    return x_->second(g, c, i, j) * y_->value(g, c) +
           x_->partial(g, c, i) * y_->partial(g, c, j) +
           x_->partial(g, c, j) * y_->partial(g, c, i) +
           x_->value(g, c) * y_->second(g, c, i, j);
  }
  bool analytic_partials() const override {
    return x_->analytic_partials() && y_->analytic_partials();
  }

 private:
  MatFnPtr x_, y_;
};

class AdjointField : public MatFn {
 public:
  explicit AdjointField(MatFnPtr x) : x_(std::move(x)) {}
  int rows() const override { return x_->rows(); }
  Mat value(const ManifoldGrid& g, const double* c) const override {
    return x_->value(g, c).adjoint();
  }
  Mat partial(const ManifoldGrid& g, const double* c, int ax) const override {
    return x_->partial(g, c, ax).adjoint();
  }
  Mat second(const ManifoldGrid& g, const double* c, int i, int j) const override {
    return x_->second(g, c, i, j).adjoint();
  }
  bool analytic_partials() const override { return x_->analytic_partials(); }

 private:
  MatFnPtr x_;
};

}  // namespace

MatFnPtr const_field(const Mat& m) { return std::make_shared<ConstField>(m); }

MatFnPtr sum_field(cplx alpha, MatFnPtr x, cplx beta, MatFnPtr y) {
  return std::make_shared<SumField>(alpha, std::move(x), beta, std::move(y));
}

MatFnPtr product_field(MatFnPtr x, MatFnPtr y) {
  return std::make_shared<ProductField>(std::move(x), std::move(y));
}

MatFnPtr adjoint_field(MatFnPtr x) { return std::make_shared<AdjointField>(std::move(x)); }

MatFnPtr conjugated_field(MatFnPtr g, MatFnPtr x) {
  // Take the adjoint before the moves below: argument evaluation order is
  // unspecified, so moving g inside the same call would race the copy.
  MatFnPtr gadj = adjoint_field(g);
  return product_field(std::move(gadj), product_field(std::move(x), std::move(g)));
}

BumpField::BumpField(std::array<double, 3> center, double sigma)
    : center_(center), sigma_(sigma) {}

double BumpField::scalar(const double* c) const {
  double q = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double w = std::remainder(c[k] - center_[k], 2.0 * std::numbers::pi);
    q += w * w;
  }
  return std::exp(-q / (2.0 * sigma_ * sigma_));
}

double BumpField::scalar_partial(const double* c, int ax) const {
  const double w = std::remainder(c[ax] - center_[ax], 2.0 * std::numbers::pi);
  return scalar(c) * (-w / (sigma_ * sigma_));
}

Mat BumpField::value(const ManifoldGrid&, const double* c) const {
  Mat m(1, 1);
  m(0, 0) = scalar(c);
  return m;
}

Mat BumpField::partial(const ManifoldGrid&, const double* c, int ax) const {
  Mat m(1, 1);
  m(0, 0) = scalar_partial(c, ax);
  return m;
}

Mat BumpField::second(const ManifoldGrid&, const double* c, int a, int b) const {
  const double wa = std::remainder(c[a] - center_[a], 2.0 * std::numbers::pi);
  const double wb = std::remainder(c[b] - center_[b], 2.0 * std::numbers::pi);
  const double s2 = sigma_ * sigma_;
  Mat m(1, 1);
  m(0, 0) = scalar(c) * (wa * wb / (s2 * s2) - (a == b ? 1.0 / s2 : 0.0));
  return m;
}

namespace {

// envelope (1x1 field) times constant matrix.
class ScaledMatByScalarField : public MatFn {
 public:
  ScaledMatByScalarField(std::shared_ptr<const BumpField> env, Mat m)
      : env_(std::move(env)), m_(std::move(m)) {}
  int rows() const override { return static_cast<int>(m_.rows()); }
  Mat value(const ManifoldGrid& g, const double* c) const override {
    return env_->value(g, c)(0, 0) * m_;
  }
  Mat partial(const ManifoldGrid& g, const double* c, int ax) const override {
    return env_->partial(g, c, ax)(0, 0) * m_;
  }
  Mat second(const ManifoldGrid& g, const double* c, int a, int b) const override {
    return env_->second(g, c, a, b)(0, 0) * m_;
  }
  bool analytic_partials() const override { return true; }

 private:
  std::shared_ptr<const BumpField> env_;
  Mat m_;
};

}  // namespace

MatFnPtr bump_times(std::shared_ptr<const BumpField> env, const Mat& m) {
  return std::make_shared<ScaledMatByScalarField>(std::move(env), m);
}

MatFnPtr random_lie_field(const GaugeBasis& basis, const ManifoldGrid& g,
                          SplitMix64& rng, double amp) {
  return std::make_shared<PolyMatField>(
      PolyMatField::random(basis.tau, g.embed_dim(), rng, amp));
}

MatFnPtr random_group_map(const GaugeBasis& basis, const ManifoldGrid& g,
                          SplitMix64& rng, double amp) {
  return std::make_shared<GroupMapField>(random_lie_field(basis, g, rng, amp));
}

}  // namespace anomaly
