#pragma once

#include <memory>
#include <vector>

#include "anomaly/fields.hpp"
#include "anomaly/grid.hpp"

namespace anomaly {

// Strictly increasing index tuples of length k among dim axes, lexicographic.
std::vector<std::array<int, kMaxDim>> index_combos(int dim, int k);

// Matrix-valued differential form sampled at every grid node.  Component
// order follows index_combos(grid.dim, degree); values are stored flat
// (node-major) and viewed through Eigen maps.
struct LieForm {
  int degree = 0;
  int rows = 0;
  const ManifoldGrid* grid = nullptr;
  std::vector<Eigen::VectorXcd> comps;

  int ncomp() const { return static_cast<int>(comps.size()); }
  Eigen::Map<Mat> at(int comp, std::size_t node) {
    return {comps[comp].data() + node * rows * rows, rows, rows};
  }
  Eigen::Map<const Mat> at(int comp, std::size_t node) const {
    return {comps[comp].data() + node * rows * rows, rows, rows};
  }
};

LieForm zero_form_like(const ManifoldGrid& g, int degree, int rows);

// One-form presented as per-axis component functions with one jet level.
class OneFormFn {
 public:
  virtual ~OneFormFn() = default;
  virtual int rows() const = 0;
  virtual Mat comp(const ManifoldGrid& g, const double* c, int i) const = 0;
  virtual Mat dcomp(const ManifoldGrid& g, const double* c, int i, int ax) const = 0;
};

using OneFormPtr = std::shared_ptr<const OneFormFn>;

OneFormPtr grad_form(MatFnPtr f);                        // df
OneFormPtr udv_form(MatFnPtr u, MatFnPtr v);             // u dv
OneFormPtr maurer_cartan(MatFnPtr g, bool left);         // g^-1 dg  /  dg g^-1 (unitary g)
OneFormPtr gauge_transformed(OneFormPtr a, MatFnPtr g);  // g^-1 A g + g^-1 dg
OneFormPtr form_sum(cplx alpha, OneFormPtr a, cplx beta, OneFormPtr b);
OneFormPtr component_form(std::vector<MatFnPtr> comps);

// Sampling and exterior derivative.  exterior_d uses the analytic jets of
// the field when present; fields without them inherit the 4th-order
// finite-difference fallback from MatFn.
LieForm sample0(const ManifoldGrid& g, const MatFn& f);
LieForm sample1(const ManifoldGrid& g, const OneFormFn& w);
LieForm exterior_d(const ManifoldGrid& g, const MatFn& f);      // 0-form -> 1-form
LieForm exterior_d(const ManifoldGrid& g, const OneFormFn& w);  // 1-form -> 2-form

// Pointwise algebra.  product_wedge multiplies matrix values; bracket_wedge
// is the graded bracket [a,b] = a^b - (-1)^{kl} b^a (so [a,a] = 2 a^a for
// odd a); ungraded_bracket_wedge is a^b - b^a, the convention under which
// the two-cocycle below is antisymmetric.
LieForm product_wedge(const LieForm& a, const LieForm& b);
LieForm bracket_wedge(const LieForm& a, const LieForm& b);
LieForm ungraded_bracket_wedge(const LieForm& a, const LieForm& b);
LieForm add(const LieForm& a, const LieForm& b);
LieForm sub(const LieForm& a, const LieForm& b);
LieForm scale(cplx s, const LieForm& a);
// [x, w] with a 0-form x applied pointwise to every component of w.
LieForm commutator0(const LieForm& w, const LieForm& x);
LieForm mul0_left(const LieForm& x, const LieForm& w);
LieForm mul0_right(const LieForm& w, const LieForm& x);

double max_abs(const LieForm& a);

// Integral of a top-degree form.  The trace variant is the deterministic
// chunked reduction used by every scalar check; the matrix variant reduces
// entrywise with the same scheme.
cplx integrate_top_trace(const LieForm& w);
Mat integrate_top(const LieForm& w);

// Curvature F = dA + A ^ A of a sampled connection.
LieForm curvature(const ManifoldGrid& g, const OneFormFn& a);

}  // namespace anomaly
