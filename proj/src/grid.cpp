#include "anomaly/grid.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anomaly {

namespace {
constexpr double kPi = std::numbers::pi;
}

Axis gauss_axis(int n, double a, double b) {
  // Golub-Welsch: nodes/weights from the symmetric tridiagonal Jacobi matrix.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double off = k / std::sqrt(4.0 * k * k - 1.0);
    J(k - 1, k) = off;
    J(k, k - 1) = off;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  Axis ax;
  ax.nodes.resize(n);
  ax.weights.resize(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int k = 0; k < n; ++k) {
    ax.nodes[k] = mid + half * es.eigenvalues()[k];
    const double v0 = es.eigenvectors()(0, k);
    ax.weights[k] = 2.0 * v0 * v0 * half;
  }
  return ax;
}

Axis trap_axis(int n, double period) {
  Axis ax;
  ax.nodes.resize(n);
  ax.weights.assign(n, period / n);
  for (int k = 0; k < n; ++k) ax.nodes[k] = period * k / n;
  return ax;
}

void ManifoldGrid::unravel(std::size_t idx, int* mi) const {
  for (int ax = dim - 1; ax >= 0; --ax) {
    mi[ax] = static_cast<int>(idx % shape[ax]);
    idx /= shape[ax];
  }
}

std::array<double, kMaxDim> ManifoldGrid::coords(std::size_t idx) const {
  int mi[kMaxDim];
  unravel(idx, mi);
  std::array<double, kMaxDim> c{};
  for (int ax = 0; ax < dim; ++ax) c[ax] = axes[ax].nodes[mi[ax]];
  return c;
}

double ManifoldGrid::coord_weight(std::size_t idx) const {
  int mi[kMaxDim];
  unravel(idx, mi);
  double w = 1.0;
  for (int ax = 0; ax < dim; ++ax) w *= axes[ax].weights[mi[ax]];
  return w;
}

double ManifoldGrid::volume() const {
  return reduce_sum(num_nodes(), [this](std::size_t i) { return coord_weight(i) * jac[i]; });
}

EmbJet ManifoldGrid::embedding_jet(const double* c) const {
  EmbJet jet;
  jet.m = embed_dim();
  jet.dim = dim;
  for (int k = 0; k < jet.m; ++k) {
    // f, f', f'' per axis factor
    double f[kMaxDim], f1[kMaxDim], f2[kMaxDim];
    for (int ax = 0; ax < dim; ++ax) {
      switch (embed[k][ax]) {
        case 0: f[ax] = 1.0; f1[ax] = 0.0; f2[ax] = 0.0; break;
        case 1: f[ax] = std::cos(c[ax]); f1[ax] = -std::sin(c[ax]); f2[ax] = -f[ax]; break;
        case 2: f[ax] = std::sin(c[ax]); f1[ax] = std::cos(c[ax]); f2[ax] = -f[ax]; break;
        case 3: f[ax] = c[ax]; f1[ax] = 1.0; f2[ax] = 0.0; break;
        default: throw std::logic_error("embedding factor code");
      }
    }
    double prod = 1.0;
    for (int ax = 0; ax < dim; ++ax) prod *= f[ax];
    jet.v[k] = prod;
    for (int a = 0; a < dim; ++a) {
      double da = 1.0;
      for (int ax = 0; ax < dim; ++ax) da *= (ax == a) ? f1[ax] : f[ax];
      jet.d[k][a] = da;
      for (int b = 0; b <= a; ++b) {
        double dab = 1.0;
        if (a == b) {
          for (int ax = 0; ax < dim; ++ax) dab *= (ax == a) ? f2[ax] : f[ax];
        } else {
          for (int ax = 0; ax < dim; ++ax)
            dab *= (ax == a) ? f1[ax] : (ax == b ? f1[ax] : f[ax]);
        }
        jet.dd[k][a][b] = dab;
        jet.dd[k][b][a] = dab;
      }
    }
  }
  return jet;
}

namespace {

void fill_jacobian(ManifoldGrid& g, const std::function<double(const double*)>& jfun) {
  std::size_t n = 1;
  for (int s : g.shape) n *= static_cast<std::size_t>(s);
  g.jac.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = g.coords(i);
    g.jac[i] = jfun(c.data());
  }
}

// Factor-code rows (one entry per axis): see EmbJet docs.
constexpr int C1 = 0, FC = 1, FS = 2;

}  // namespace

ManifoldGrid build_grid(Manifold m, int order) {
  if (order < 2) throw std::invalid_argument("build_grid: order must be >= 2");
  ManifoldGrid g;
  g.manifold = m;
  g.order = order;
  switch (m) {
    case Manifold::S1:
      g.dim = 1;
      g.axes = {trap_axis(2 * order, 2 * kPi)};
      g.embed = {{FC}, {FS}};
      break;
    case Manifold::S2:
      g.dim = 2;
      g.axes = {gauss_axis(order, 0.0, kPi), trap_axis(2 * order, 2 * kPi)};
      g.embed = {{FS, FC}, {FS, FS}, {FC, C1}};
      break;
    case Manifold::S3:
      g.dim = 3;
      g.axes = {gauss_axis(order, 0.0, kPi), gauss_axis(order, 0.0, kPi),
                trap_axis(2 * order, 2 * kPi)};
      g.embed = {{FC, C1, C1}, {FS, FC, C1}, {FS, FS, FC}, {FS, FS, FS}};
      break;
    case Manifold::B3:
      g.dim = 3;
      g.axes = {gauss_axis(order, 0.0, 1.0), gauss_axis(order, 0.0, kPi),
                trap_axis(2 * order, 2 * kPi)};
      g.embed = {{3, FS, FC}, {3, FS, FS}, {3, FC, C1}};
      break;
    case Manifold::T3:
      g.dim = 3;
      g.axes = {trap_axis(order, 2 * kPi), trap_axis(order, 2 * kPi),
                trap_axis(order, 2 * kPi)};
      g.embed = {{FC, C1, C1}, {FS, C1, C1}, {C1, FC, C1},
                 {C1, FS, C1}, {C1, C1, FC}, {C1, C1, FS}};
      break;
    default:
      throw std::invalid_argument("build_grid: unsupported manifold tag");
  }
  g.shape.clear();
  for (const auto& ax : g.axes) g.shape.push_back(static_cast<int>(ax.nodes.size()));
  switch (m) {
    case Manifold::S1:
      fill_jacobian(g, [](const double*) { return 1.0; });
      break;
    case Manifold::S2:
      fill_jacobian(g, [](const double* c) { return std::sin(c[0]); });
      break;
    case Manifold::S3:
      fill_jacobian(g, [](const double* c) {
        const double s = std::sin(c[0]);
        return s * s * std::sin(c[1]);
      });
      break;
    case Manifold::B3:
      fill_jacobian(g, [](const double* c) { return c[0] * c[0] * std::sin(c[1]); });
      break;
    case Manifold::T3:
      fill_jacobian(g, [](const double*) { return 1.0; });
      break;
    default:
      break;
  }
  return g;
}

ManifoldGrid product_grid(const ManifoldGrid& a, const ManifoldGrid& b, Manifold tag) {
  ManifoldGrid g;
  g.manifold = tag;
  g.order = a.order;
  g.dim = a.dim + b.dim;
  if (g.dim > kMaxDim) throw std::invalid_argument("product_grid: dim > kMaxDim");
  g.axes = a.axes;
  g.axes.insert(g.axes.end(), b.axes.begin(), b.axes.end());
  for (const auto& ax : g.axes) g.shape.push_back(static_cast<int>(ax.nodes.size()));
  for (const auto& row : a.embed) {
    std::array<int, kMaxDim> r{};
    for (int i = 0; i < a.dim; ++i) r[i] = row[i];
    g.embed.push_back(r);
  }
  for (const auto& row : b.embed) {
    std::array<int, kMaxDim> r{};
    for (int i = 0; i < b.dim; ++i) r[a.dim + i] = row[i];
    g.embed.push_back(r);
  }
  if (g.embed_dim() > kMaxEmbed) throw std::invalid_argument("product_grid: embed > kMaxEmbed");
  const std::size_t nb = b.num_nodes();
  g.jac.resize(a.num_nodes() * nb);
  for (std::size_t i = 0; i < a.num_nodes(); ++i)
    for (std::size_t j = 0; j < nb; ++j) g.jac[i * nb + j] = a.jac[i] * b.jac[j];
  return g;
}

ManifoldGrid boundary_sphere(const ManifoldGrid& b3) {
  if (b3.manifold != Manifold::B3) throw std::invalid_argument("boundary_sphere: needs B3");
  ManifoldGrid g;
  g.manifold = Manifold::S2;
  g.order = b3.order;
  g.dim = 2;
  g.axes = {b3.axes[1], b3.axes[2]};
  g.shape = {b3.shape[1], b3.shape[2]};
  g.embed = {{FS, FC}, {FS, FS}, {FC, C1}};
  fill_jacobian(g, [](const double* c) { return std::sin(c[0]); });
  return g;
}

ManifoldGrid cap_grid(double theta_lo, double theta_hi, int order) {
  ManifoldGrid g;
  g.manifold = Manifold::Cap2;
  g.order = order;
  g.dim = 2;
  g.axes = {gauss_axis(order, theta_lo, theta_hi), trap_axis(2 * order, 2 * kPi)};
  g.shape = {static_cast<int>(g.axes[0].nodes.size()), static_cast<int>(g.axes[1].nodes.size())};
  g.embed = {{FS, FC}, {FS, FS}, {FC, C1}};
  fill_jacobian(g, [](const double* c) { return std::sin(c[0]); });
  return g;
}

}  // namespace anomaly
