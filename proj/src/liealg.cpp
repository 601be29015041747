#include "anomaly/liealg.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace anomaly {

Eigen::VectorXd GaugeBasis::coefficients(const Mat& x) const {
  Eigen::VectorXd c(dim());
  for (int a = 0; a < dim(); ++a) c[a] = 2.0 * (tau[a] * x).trace().real();
  return c;
}

Mat GaugeBasis::realize(const Eigen::VectorXd& coeff) const {
  Mat x = Mat::Zero(p, p);
  for (int a = 0; a < dim(); ++a) x += coeff[a] * tau[a];
  return x;
}

GaugeBasis build_gauge_basis(int p, AlgebraKind kind) {
  if (p < 2) throw std::invalid_argument("build_gauge_basis: p must be >= 2");
  GaugeBasis basis;
  basis.p = p;
  basis.kind = kind;
  if (kind == AlgebraKind::u)
    basis.tau.push_back(Mat::Identity(p, p) / std::sqrt(2.0 * p));
  // Generalized Gell-Mann matrices, halved.  The (sym, antisym, diagonal)
  // interleaving below reproduces the standard Gell-Mann order at p = 3.
  for (int k = 1; k < p; ++k) {
    for (int j = 0; j < k; ++j) {
      Mat sym = Mat::Zero(p, p);
      sym(j, k) = 1.0;
      sym(k, j) = 1.0;
      basis.tau.push_back(0.5 * sym);
      Mat asym = Mat::Zero(p, p);
      asym(j, k) = cplx(0.0, -1.0);
      asym(k, j) = cplx(0.0, 1.0);
      basis.tau.push_back(0.5 * asym);
    }
    Mat diag = Mat::Zero(p, p);
    for (int j = 0; j <= k; ++j) diag(j, j) = (j < k) ? 1.0 : -static_cast<double>(k);
    basis.tau.push_back(diag / std::sqrt(2.0 * k * (k + 1.0)));
  }
  return basis;
}

StructureConstants structure_constants(const GaugeBasis& basis) {
  const int n = basis.dim();
  StructureConstants sc;
  sc.dim = n;
  sc.lambda.assign(static_cast<std::size_t>(n) * n * n, 0.0);
  sc.dsym.assign(static_cast<std::size_t>(n) * n * n, 0.0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Mat comm = basis.tau[a] * basis.tau[b] - basis.tau[b] * basis.tau[a];
      const Mat anti = basis.tau[a] * basis.tau[b] + basis.tau[b] * basis.tau[a];
      for (int c = 0; c < n; ++c) {
        const cplx lt = (comm * basis.tau[c]).trace();
        const cplx dt = (anti * basis.tau[c]).trace();
        sc.lambda[(static_cast<std::size_t>(a) * n + b) * n + c] = (cplx(0.0, -2.0) * lt).real();
        sc.dsym[(static_cast<std::size_t>(a) * n + b) * n + c] = 2.0 * dt.real();
      }
    }
  return sc;
}

SpinBasis SpinBasis::standard() {
  SpinBasis s;
  for (auto& m : s.sigma) m = Mat::Zero(2, 2);
  s.sigma[0] << 1, 0, 0, 1;
  s.sigma[1] << 0, 1, 1, 0;
  s.sigma[2] << 0, cplx(0, -1), cplx(0, 1), 0;
  s.sigma[3] << 1, 0, 0, -1;
  return s;
}

TensorBasis TensorBasis::build(int p) {
  TensorBasis tb;
  tb.gauge = build_gauge_basis(p, AlgebraKind::u);
  tb.spin = SpinBasis::standard();
  return tb;
}

Mat TensorBasis::element(int mu, int a) const {
  return Eigen::kroneckerProduct(spin.sigma[mu], gauge.tau[a]);
}

Mat TensorBasis::realize(const Eigen::MatrixXcd& coeff) const {
  const int n = 2 * p();
  Mat x = Mat::Zero(n, n);
  for (int mu = 0; mu < 4; ++mu)
    for (int a = 0; a < gdim(); ++a)
      if (coeff(mu, a) != cplx(0.0, 0.0)) x += coeff(mu, a) * element(mu, a);
  return x;
}

TensorElement TensorBasis::decompose(const Mat& x) const {
  // tr((sigma^mu (x) tau^a)^2) = tr(sigma^mu sigma^mu) tr(tau^a tau^a) = 1,
  // so the Hermitian products form an orthonormal (Frobenius) basis of gl(2p).
  TensorElement e;
  e.coeff.resize(4, gdim());
  for (int mu = 0; mu < 4; ++mu)
    for (int a = 0; a < gdim(); ++a) e.coeff(mu, a) = (element(mu, a) * x).trace();
  e.matrix = x;
  return e;
}

Mat tensor_commutator(const TensorBasis& basis, const TensorElement& x,
                      const TensorElement& y, double* split_deviation) {
  const Mat direct = x.matrix * y.matrix - y.matrix * x.matrix;
  if (split_deviation) {
    // Split route: expand over coefficient pairs and apply, per pure tensor,
    //   [s (x) t, s' (x) t'] = [s,s'] (x) (t t') + (s' s) (x) [t,t'].
    const int n = 2 * basis.p();
    Mat split = Mat::Zero(n, n);
    for (int mu = 0; mu < 4; ++mu)
      for (int a = 0; a < basis.gdim(); ++a) {
        const cplx xc = x.coeff(mu, a);
        if (xc == cplx(0.0, 0.0)) continue;
        for (int nu = 0; nu < 4; ++nu)
          for (int b = 0; b < basis.gdim(); ++b) {
            const cplx yc = y.coeff(nu, b);
            if (yc == cplx(0.0, 0.0)) continue;
            const Mat& sm = basis.spin.sigma[mu];
            const Mat& sn = basis.spin.sigma[nu];
            const Mat& ta = basis.gauge.tau[a];
            const Mat& tb = basis.gauge.tau[b];
            split += (xc * yc) * (Eigen::kroneckerProduct((sm * sn - sn * sm).eval(),
                                                          (ta * tb).eval()) +
                                  Eigen::kroneckerProduct((sn * sm).eval(),
                                                          (ta * tb - tb * ta).eval()));
          }
      }
    *split_deviation = (split - direct).cwiseAbs().maxCoeff();
  }
  return direct;
}

AlgebraElement random_algebra_element(const GaugeBasis& basis, SplitMix64& rng, double amp) {
  AlgebraElement e;
  e.coeff.resize(basis.dim());
  for (int a = 0; a < basis.dim(); ++a) e.coeff[a] = rng.next_symmetric(amp);
  e.matrix = basis.realize(e.coeff);
  return e;
}

}  // namespace anomaly
