#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "anomaly/common.hpp"

namespace anomaly {

// Chart conventions (orientation = listed coordinate order):
//   S1: theta in [0,2pi)                        volume 2pi
//   S2: (theta, phi), jacobian sin(theta)       volume 4pi
//   S3: (psi, theta, phi), jacobian sin^2(psi) sin(theta), volume 2pi^2
//   B3: (r, theta, phi), jacobian r^2 sin(theta), volume 4pi/3
//   T3: (t1, t2, t3), jacobian 1                volume (2pi)^3
//   S3xS2: product chart (psi,theta,phi,theta',phi') used for 5-form checks
// Quadrature: Gauss-Legendre on bounded non-periodic axes, trapezoid on
// periodic ones.  Order n means n Gauss nodes per half-range axis, 2n
// trapezoid nodes on full circles of S1/S2/S3/B3, and n nodes per T3 axis.
enum class Manifold { S1, S2, S3, B3, T3, S3xS2, Cap2 };

struct Axis {
  std::vector<double> nodes;
  std::vector<double> weights;
};

Axis gauss_axis(int n, double a, double b);
Axis trap_axis(int n, double period);

inline constexpr int kMaxDim = 5;
inline constexpr int kMaxEmbed = 8;

// Embedding functions are products of per-axis factors; codes:
// 0 -> 1, 1 -> cos(c), 2 -> sin(c), 3 -> c.
struct EmbJet {
  int m = 0;
  int dim = 0;
  std::array<double, kMaxEmbed> v{};
  std::array<std::array<double, kMaxDim>, kMaxEmbed> d{};
  std::array<std::array<std::array<double, kMaxDim>, kMaxDim>, kMaxEmbed> dd{};
};

struct ManifoldGrid {
  Manifold manifold = Manifold::S1;
  int order = 0;
  int dim = 0;
  std::vector<Axis> axes;
  std::vector<int> shape;
  std::vector<double> jac;                      // per node
  std::vector<std::array<int, kMaxDim>> embed;  // factor codes per embedding fn

  std::size_t num_nodes() const { return jac.size(); }
  int embed_dim() const { return static_cast<int>(embed.size()); }
  void unravel(std::size_t idx, int* mi) const;
  std::array<double, kMaxDim> coords(std::size_t idx) const;
  double coord_weight(std::size_t idx) const;  // product of axis weights only
  double volume() const;                       // sum of coord_weight * jac
  EmbJet embedding_jet(const double* c) const;
};

ManifoldGrid build_grid(Manifold m, int order);
// Product chart: axes concatenated, jacobians multiplied, embeddings stacked.
ManifoldGrid product_grid(const ManifoldGrid& a, const ManifoldGrid& b, Manifold tag);
// Boundary injection for B3: the r = 1 sphere with the same angular axes.
// A boundary node (theta,phi) corresponds to B3 chart coords (1,theta,phi),
// and the S2 embedding equals the B3 embedding restricted to r = 1.
ManifoldGrid boundary_sphere(const ManifoldGrid& b3);
// Spherical cap theta in [lo,hi] x full phi circle (monopole patches).
ManifoldGrid cap_grid(double theta_lo, double theta_hi, int order);

}  // namespace anomaly
