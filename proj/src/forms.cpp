#include "anomaly/forms.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace anomaly {

std::vector<std::array<int, kMaxDim>> index_combos(int dim, int k) {
  std::vector<std::array<int, kMaxDim>> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  std::array<int, kMaxDim> idx{};
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == dim - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

LieForm zero_form_like(const ManifoldGrid& g, int degree, int rows) {
  LieForm f;
  f.degree = degree;
  f.rows = rows;
  f.grid = &g;
  const auto combos = index_combos(g.dim, degree);
  f.comps.assign(combos.size(),
                 Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(g.num_nodes()) * rows * rows));
  return f;
}

namespace {

class GradFormFn : public OneFormFn {
 public:
  explicit GradFormFn(MatFnPtr f) : f_(std::move(f)) {}
  int rows() const override { return f_->rows(); }
  Mat comp(const ManifoldGrid& g, const double* c, int i) const override {
    return f_->partial(g, c, i);
  }
  Mat dcomp(const ManifoldGrid& g, const double* c, int i, int ax) const override {
    return f_->second(g, c, i, ax);
  }

 private:
  MatFnPtr f_;
};

class UdVFormFn : public OneFormFn {
 public:
  UdVFormFn(MatFnPtr u, MatFnPtr v) : u_(std::move(u)), v_(std::move(v)) {}
  int rows() const override { return u_->rows(); }
  Mat comp(const ManifoldGrid& g, const double* c, int i) const override {
    return u_->value(g, c) * v_->partial(g, c, i);
  }
  Mat dcomp(const ManifoldGrid& g, const double* c, int i, int ax) const override {
    return u_->partial(g, c, ax) * v_->partial(g, c, i) +
           u_->value(g, c) * v_->second(g, c, i, ax);
  }

 private:
  MatFnPtr u_, v_;
};

class MaurerCartanFn : public OneFormFn {
 public:
  MaurerCartanFn(MatFnPtr g, bool left) : g_(std::move(g)), left_(left) {}
  int rows() const override { return g_->rows(); }
  Mat comp(const ManifoldGrid& g, const double* c, int i) const override {
    if (left_) return g_->value(g, c).adjoint() * g_->partial(g, c, i);
    return g_->partial(g, c, i) * g_->value(g, c).adjoint();
  }
  Mat dcomp(const ManifoldGrid& g, const double* c, int i, int ax) const override {
    if (left_)
      return g_->partial(g, c, ax).adjoint() * g_->partial(g, c, i) +
             g_->value(g, c).adjoint() * g_->second(g, c, i, ax);
    return g_->second(g, c, i, ax) * g_->value(g, c).adjoint() +
           g_->partial(g, c, i) * g_->partial(g, c, ax).adjoint();
  }

 private:
  MatFnPtr g_;
  bool left_;
};

class GaugeTransformedFn : public OneFormFn {
 public:
  GaugeTransformedFn(OneFormPtr a, MatFnPtr g) : a_(std::move(a)), g_(std::move(g)) {}
  int rows() const override { return a_->rows(); }
  Mat comp(const ManifoldGrid& g, const double* c, int i) const override {
    const Mat gv = g_->value(g, c);
    return gv.adjoint() * (a_->comp(g, c, i) * gv + g_->partial(g, c, i));
  }
  Mat dcomp(const ManifoldGrid& g, const double* c, int i, int ax) const override {
    const Mat gv = g_->value(g, c);
    const Mat gax = g_->partial(g, c, ax);
    const Mat ai = a_->comp(g, c, i);
    return gax.adjoint() * (ai * gv + g_->partial(g, c, i)) +
           gv.adjoint() * (a_->dcomp(g, c, i, ax) * gv + ai * gax + g_->second(g, c, i, ax));
  }

 private:
  OneFormPtr a_;
  MatFnPtr g_;
};

class FormSumFn : public OneFormFn {
 public:
  FormSumFn(cplx alpha, OneFormPtr a, cplx beta, OneFormPtr b)
      : alpha_(alpha), beta_(beta), a_(std::move(a)), b_(std::move(b)) {}
  int rows() const override { return a_->rows(); }
  Mat comp(const ManifoldGrid& g, const double* c, int i) const override {
    return alpha_ * a_->comp(g, c, i) + beta_ * b_->comp(g, c, i);
  }
  Mat dcomp(const ManifoldGrid& g, const double* c, int i, int ax) const override {
    return alpha_ * a_->dcomp(g, c, i, ax) + beta_ * b_->dcomp(g, c, i, ax);
  }

 private:
  cplx alpha_, beta_;
  OneFormPtr a_, b_;
};

class ComponentFormFn : public OneFormFn {
 public:
  explicit ComponentFormFn(std::vector<MatFnPtr> comps) : comps_(std::move(comps)) {}
  int rows() const override { return comps_[0]->rows(); }
  Mat comp(const ManifoldGrid& g, const double* c, int i) const override {
    return comps_[i]->value(g, c);
  }
  Mat dcomp(const ManifoldGrid& g, const double* c, int i, int ax) const override {
    return comps_[i]->partial(g, c, ax);
  }

 private:
  std::vector<MatFnPtr> comps_;
};

}  // namespace

OneFormPtr grad_form(MatFnPtr f) { return std::make_shared<GradFormFn>(std::move(f)); }

OneFormPtr udv_form(MatFnPtr u, MatFnPtr v) {
  return std::make_shared<UdVFormFn>(std::move(u), std::move(v));
}

OneFormPtr maurer_cartan(MatFnPtr g, bool left) {
  return std::make_shared<MaurerCartanFn>(std::move(g), left);
}

OneFormPtr gauge_transformed(OneFormPtr a, MatFnPtr g) {
  return std::make_shared<GaugeTransformedFn>(std::move(a), std::move(g));
}

OneFormPtr form_sum(cplx alpha, OneFormPtr a, cplx beta, OneFormPtr b) {
  return std::make_shared<FormSumFn>(alpha, std::move(a), beta, std::move(b));
}

OneFormPtr component_form(std::vector<MatFnPtr> comps) {
  return std::make_shared<ComponentFormFn>(std::move(comps));
}

LieForm sample0(const ManifoldGrid& g, const MatFn& f) {
  LieForm out = zero_form_like(g, 0, f.rows());
  parallel_for(g.num_nodes(), [&](std::size_t i) {
    const auto c = g.coords(i);
    out.at(0, i) = f.value(g, c.data());
  });
  return out;
}

LieForm sample1(const ManifoldGrid& g, const OneFormFn& w) {
  LieForm out = zero_form_like(g, 1, w.rows());
  parallel_for(g.num_nodes(), [&](std::size_t i) {
    const auto c = g.coords(i);
    for (int ax = 0; ax < g.dim; ++ax) out.at(ax, i) = w.comp(g, c.data(), ax);
  });
  return out;
}

LieForm exterior_d(const ManifoldGrid& g, const MatFn& f) {
  LieForm out = zero_form_like(g, 1, f.rows());
  parallel_for(g.num_nodes(), [&](std::size_t i) {
    const auto c = g.coords(i);
    for (int ax = 0; ax < g.dim; ++ax) out.at(ax, i) = f.partial(g, c.data(), ax);
  });
  return out;
}

LieForm exterior_d(const ManifoldGrid& g, const OneFormFn& w) {
  LieForm out = zero_form_like(g, 2, w.rows());
  const auto combos = index_combos(g.dim, 2);
  parallel_for(g.num_nodes(), [&](std::size_t i) {
    const auto c = g.coords(i);
    for (std::size_t k = 0; k < combos.size(); ++k) {
      const int a = combos[k][0], b = combos[k][1];
      out.at(static_cast<int>(k), i) = w.dcomp(g, c.data(), b, a) - w.dcomp(g, c.data(), a, b);
    }
  });
  return out;
}

namespace {

int combo_rank(const std::vector<std::array<int, kMaxDim>>& combos, const int* idx, int k) {
  for (std::size_t r = 0; r < combos.size(); ++r) {
    bool match = true;
    for (int i = 0; i < k; ++i)
      if (combos[r][i] != idx[i]) {
        match = false;
        break;
      }
    if (match) return static_cast<int>(r);
  }
  throw std::logic_error("combo_rank: tuple not found");
}

}  // namespace

LieForm product_wedge(const LieForm& a, const LieForm& b) {
  if (a.grid != b.grid) throw std::invalid_argument("product_wedge: grid mismatch");
  const ManifoldGrid& g = *a.grid;
  const int k = a.degree, l = b.degree, kl = k + l;
  if (kl > g.dim) throw std::invalid_argument("product_wedge: degree exceeds dim");
  LieForm out = zero_form_like(g, kl, a.rows);
  const auto combos_out = index_combos(g.dim, kl);
  const auto combos_a = index_combos(g.dim, k);
  const auto combos_b = index_combos(g.dim, l);

  // Precompute the split table: for each output tuple, the (a-comp, b-comp,
  // sign) triples over all k-subsets of its positions.
  struct Split {
    int ca, cb;
    double sign;
  };
  std::vector<std::vector<Split>> table(combos_out.size());
  for (std::size_t r = 0; r < combos_out.size(); ++r) {
    const auto& S = combos_out[r];
    for (unsigned mask = 0; mask < (1u << kl); ++mask) {
      if (std::popcount(mask) != k) continue;
      int ia[kMaxDim], ib[kMaxDim], na = 0, nb = 0;
      // Permutation parity of (P positions, Q positions) within S: count
      // inversions, i.e. pairs (q in Q) before (p in P) with q-position < p.
      int inversions = 0;
      for (int pos = 0; pos < kl; ++pos) {
        if (mask & (1u << pos)) {
          ia[na++] = S[pos];
          inversions += pos - (na - 1);  // unselected slots before this one
        } else {
          ib[nb++] = S[pos];
        }
      }
      Split s;
      s.ca = combo_rank(combos_a, ia, k);
      s.cb = combo_rank(combos_b, ib, l);
      s.sign = (inversions % 2 == 0) ? 1.0 : -1.0;
      table[r].push_back(s);
    }
  }

  parallel_for(g.num_nodes(), [&](std::size_t i) {
    Mat acc(a.rows, a.rows);
    for (std::size_t r = 0; r < combos_out.size(); ++r) {
      acc.setZero();
      for (const Split& s : table[r])
        acc.noalias() += s.sign * (a.at(s.ca, i) * b.at(s.cb, i));
      out.at(static_cast<int>(r), i) = acc;
    }
  });
  return out;
}

LieForm bracket_wedge(const LieForm& a, const LieForm& b) {
  const double sgn = (a.degree * b.degree) % 2 == 0 ? 1.0 : -1.0;
  return sub(product_wedge(a, b), scale(sgn, product_wedge(b, a)));
}

LieForm ungraded_bracket_wedge(const LieForm& a, const LieForm& b) {
  return sub(product_wedge(a, b), product_wedge(b, a));
}

namespace {

LieForm combine(const LieForm& a, const LieForm& b, cplx ca, cplx cb) {
  if (a.grid != b.grid || a.degree != b.degree || a.rows != b.rows)
    throw std::invalid_argument("form combine: shape mismatch");
  LieForm out = a;
  for (int c = 0; c < out.ncomp(); ++c) out.comps[c] = ca * a.comps[c] + cb * b.comps[c];
  return out;
}

}  // namespace

LieForm add(const LieForm& a, const LieForm& b) { return combine(a, b, 1.0, 1.0); }
LieForm sub(const LieForm& a, const LieForm& b) { return combine(a, b, 1.0, -1.0); }

LieForm scale(cplx s, const LieForm& a) {
  LieForm out = a;
  for (auto& c : out.comps) c *= s;
  return out;
}

LieForm commutator0(const LieForm& w, const LieForm& x) {
  return sub(mul0_right(w, x), mul0_left(x, w));
}

LieForm mul0_left(const LieForm& x, const LieForm& w) {
  if (x.degree != 0) throw std::invalid_argument("mul0_left: x must be a 0-form");
  LieForm out = w;
  parallel_for(w.grid->num_nodes(), [&](std::size_t i) {
    for (int c = 0; c < w.ncomp(); ++c) out.at(c, i) = x.at(0, i) * w.at(c, i);
  });
  return out;
}

LieForm mul0_right(const LieForm& w, const LieForm& x) {
  if (x.degree != 0) throw std::invalid_argument("mul0_right: x must be a 0-form");
  LieForm out = w;
  parallel_for(w.grid->num_nodes(), [&](std::size_t i) {
    for (int c = 0; c < w.ncomp(); ++c) out.at(c, i) = w.at(c, i) * x.at(0, i);
  });
  return out;
}

double max_abs(const LieForm& a) {
  double m = 0.0;
  for (const auto& c : a.comps) m = std::max(m, c.cwiseAbs().maxCoeff());
  return m;
}

cplx integrate_top_trace(const LieForm& w) {
  const ManifoldGrid& g = *w.grid;
  if (w.degree != g.dim) throw std::invalid_argument("integrate_top_trace: not top degree");
  return reduce_sum_cplx(g.num_nodes(), [&](std::size_t i) {
    return g.coord_weight(i) * w.at(0, i).trace();
  });
}

Mat integrate_top(const LieForm& w) {
  const ManifoldGrid& g = *w.grid;
  if (w.degree != g.dim) throw std::invalid_argument("integrate_top: not top degree");
  Mat out(w.rows, w.rows);
  for (int r = 0; r < w.rows; ++r)
    for (int c = 0; c < w.rows; ++c)
      out(r, c) = reduce_sum_cplx(g.num_nodes(), [&](std::size_t i) {
        return g.coord_weight(i) * w.at(0, i)(r, c);
      });
  return out;
}

LieForm curvature(const ManifoldGrid& g, const OneFormFn& a) {
  const LieForm da = exterior_d(g, a);
  const LieForm av = sample1(g, a);
  return add(da, product_wedge(av, av));
}

}  // namespace anomaly
