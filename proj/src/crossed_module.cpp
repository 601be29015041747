#include "anomaly/crossed_module.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace anomaly {

namespace {

void require_structure(const CrossedModuleFinite& cm) {
  const int nh = cm.h.n;
  const int ng = cm.g.n;
  if (static_cast<int>(cm.delta.size()) != nh)
    throw std::invalid_argument("crossed_module: delta table has wrong size");
  if (static_cast<int>(cm.act.size()) != ng)
    throw std::invalid_argument("crossed_module: action table has wrong size");
  if (!is_homomorphism(cm.h, cm.g, cm.delta))
    throw std::invalid_argument("crossed_module: delta is not a homomorphism");
  for (int g = 0; g < ng; ++g) {
    const auto& a = cm.act[g];
    if (static_cast<int>(a.size()) != nh)
      throw std::invalid_argument("crossed_module: action row has wrong size");
    std::vector<bool> seen(nh, false);
    for (int h = 0; h < nh; ++h) {
      if (a[h] < 0 || a[h] >= nh || seen[a[h]])
        throw std::invalid_argument("crossed_module: act[g] is not a bijection");
      seen[a[h]] = true;
    }
    for (int x = 0; x < nh; ++x)
      for (int y = 0; y < nh; ++y)
        if (a[cm.h.op(x, y)] != cm.h.op(a[x], a[y]))
          throw std::invalid_argument("crossed_module: act[g] is not an automorphism");
  }
  for (int g1 = 0; g1 < ng; ++g1)
    for (int g2 = 0; g2 < ng; ++g2)
      for (int h = 0; h < nh; ++h)
        if (cm.act[cm.g.op(g1, g2)][h] != cm.act[g2][cm.act[g1][h]])
          throw std::invalid_argument("crossed_module: act is not a right action");
}

}  // namespace

AxiomReport check_axioms(const CrossedModuleFinite& cm) {
  require_structure(cm);
  AxiomReport rep;
  const int nh = cm.h.n;
  const int ng = cm.g.n;

  for (int h = 0; h < nh && rep.peiffer_ok; ++h)
    for (int hp = 0; hp < nh && rep.peiffer_ok; ++hp) {
      const int lhs = cm.act[cm.delta[hp]][h];
      const int rhs = cm.h.op(cm.h.op(cm.h.inv[hp], h), hp);
      if (lhs != rhs) {
        rep.peiffer_ok = false;
        std::ostringstream os;
        os << "Peiffer identity fails at (h = " << cm.h.names[h] << ", h' = "
           << cm.h.names[hp] << "): h^{delta h'} = " << cm.h.names[lhs]
           << " but h'^-1 h h' = " << cm.h.names[rhs];
        rep.witness = os.str();
      }
    }

  for (int h = 0; h < nh && rep.equivariance_ok; ++h)
    for (int g = 0; g < ng && rep.equivariance_ok; ++g) {
      const int lhs = cm.delta[cm.act[g][h]];
      const int rhs = cm.g.op(cm.g.op(cm.g.inv[g], cm.delta[h]), g);
      if (lhs != rhs) {
        rep.equivariance_ok = false;
        std::ostringstream os;
        os << "equivariance fails at (h = " << cm.h.names[h] << ", g = "
           << cm.g.names[g] << "): delta(h^g) = " << cm.g.names[lhs]
           << " but g^-1 delta(h) g = " << cm.g.names[rhs];
        if (!rep.witness.empty()) rep.witness += "; ";
        rep.witness += os.str();
      }
    }

  return rep;
}

CrossedModuleFinite conjugation_module(const FiniteGroup& g) {
  CrossedModuleFinite cm;
  cm.h = g;
  cm.g = g;
  cm.delta.resize(g.n);
  for (int i = 0; i < g.n; ++i) cm.delta[i] = i;
  cm.act.assign(g.n, std::vector<int>(g.n));
  for (int a = 0; a < g.n; ++a)
    for (int h = 0; h < g.n; ++h) cm.act[a][h] = g.op(g.op(g.inv[a], h), a);
  return cm;
}

CrossedModuleFinite inclusion_module(const FiniteGroup& g, const std::vector<int>& elems) {
  const int m = static_cast<int>(elems.size());
  std::vector<int> pos(g.n, -1);
  for (int i = 0; i < m; ++i) pos[elems[i]] = i;

  FiniteGroup sub;
  sub.n = m;
  sub.mul.assign(static_cast<std::size_t>(m) * m, -1);
  sub.inv.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    sub.names.push_back(g.names[elems[i]]);
    if (pos[g.inv[elems[i]]] < 0)
      throw std::invalid_argument("crossed_module: subset not closed under inverse");
    sub.inv[i] = pos[g.inv[elems[i]]];
    for (int j = 0; j < m; ++j) {
      const int prod = g.op(elems[i], elems[j]);
      if (pos[prod] < 0)
        throw std::invalid_argument("crossed_module: subset not closed under product");
      sub.mul[i * m + j] = pos[prod];
    }
  }

  CrossedModuleFinite cm;
  cm.h = sub;
  cm.g = g;
  cm.delta.resize(m);
  for (int i = 0; i < m; ++i) cm.delta[i] = elems[i];
  cm.act.assign(g.n, std::vector<int>(m));
  for (int a = 0; a < g.n; ++a)
    for (int i = 0; i < m; ++i) {
      const int conj = g.op(g.op(g.inv[a], elems[i]), a);
      if (pos[conj] < 0)
        throw std::invalid_argument("crossed_module: subgroup is not normal");
      cm.act[a][i] = pos[conj];
    }
  return cm;
}

CrossedModuleFinite quotient_module(const FiniteGroup& h, const FiniteGroup& g,
                                    const std::vector<int>& proj) {
  if (static_cast<int>(proj.size()) != h.n)
    throw std::invalid_argument("crossed_module: projection table has wrong size");
  if (!is_homomorphism(h, g, proj))
    throw std::invalid_argument("crossed_module: projection is not a homomorphism");
  CrossedModuleFinite cm;
  cm.h = h;
  cm.g = g;
  cm.delta = proj;
  cm.act.assign(g.n, std::vector<int>(h.n));
  for (int a = 0; a < g.n; ++a)
    for (int x = 0; x < h.n; ++x) cm.act[a][x] = x;
  return cm;
}

CrossedModuleFinite sabotage_s3() {
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  CrossedModuleFinite cm;
  cm.h = s3;
  cm.g = s3;
  cm.delta.resize(s3.n);
  for (int i = 0; i < s3.n; ++i) cm.delta[i] = i;
  cm.act.assign(s3.n, std::vector<int>(s3.n));
  for (int a = 0; a < s3.n; ++a)
    for (int h = 0; h < s3.n; ++h) cm.act[a][h] = h;
  return cm;
}

CrossedModuleFinite from_central_extension(const CentralExtension& ext) {
  const FiniteGroup& h = ext.h;
  const FiniteGroup& g = ext.g;
  if (static_cast<int>(ext.proj.size()) != h.n ||
      static_cast<int>(ext.section.size()) != g.n)
    throw std::invalid_argument("crossed_module: extension tables have wrong size");
  if (!is_homomorphism(h, g, ext.proj))
    throw std::invalid_argument("crossed_module: projection is not a homomorphism");
  for (int a = 0; a < g.n; ++a)
    if (ext.proj[ext.section[a]] != a)
      throw std::invalid_argument("crossed_module: section does not split the projection");

  // Centrality of the kernel, with a named witness on failure.
  const int eg = [&] {
    for (int a = 0; a < g.n; ++a)
      if (g.op(a, a) == a) return a;
    throw std::invalid_argument("crossed_module: quotient has no identity");
  }();
  for (int k = 0; k < h.n; ++k) {
    if (ext.proj[k] != eg) continue;
    for (int x = 0; x < h.n; ++x)
      if (h.op(k, x) != h.op(x, k)) {
        std::ostringstream os;
        os << "crossed_module: kernel element " << h.names[k]
           << " fails to commute with " << h.names[x];
        throw std::invalid_argument(os.str());
      }
  }

  CrossedModuleFinite cm;
  cm.h = h;
  cm.g = g;
  cm.delta = ext.proj;
  cm.act.assign(g.n, std::vector<int>(h.n));
  for (int a = 0; a < g.n; ++a) {
    const int s = ext.section[a];
    for (int x = 0; x < h.n; ++x) cm.act[a][x] = h.op(h.op(h.inv[s], x), s);
  }
  return cm;
}

CentralExtension z2_z4_z2_extension() {
  CentralExtension ext;
  ext.h = FiniteGroup::cyclic(4);
  ext.g = FiniteGroup::cyclic(2);
  ext.proj = {0, 1, 0, 1};
  ext.section = {0, 1};
  return ext;
}

CentralExtension trivial_product_extension(const FiniteGroup& a, const FiniteGroup& g) {
  CentralExtension ext;
  ext.h = FiniteGroup::product(a, g);
  ext.g = g;
  // product ordering: index = i_a * g.n + i_g.
  ext.proj.resize(ext.h.n);
  for (int i = 0; i < ext.h.n; ++i) ext.proj[i] = i % g.n;
  ext.section.resize(g.n);
  for (int i = 0; i < g.n; ++i) ext.section[i] = i;
  return ext;
}

Eigen::Matrix3d su2_to_so3(const Mat& u) {
  const SpinBasis sb = SpinBasis::standard();
  Eigen::Matrix3d r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = 0.5 * (sb.sigma[i + 1] * u * sb.sigma[j + 1] * u.adjoint()).trace().real();
  return r;
}

namespace {

Mat quaternion_to_su2(double w, double x, double y, double z) {
  const SpinBasis sb = SpinBasis::standard();
  // Our covering satisfies R(U(q)) = R_std(conj q) for U(q) = q0 + i q.sigma,
  // so a standard-convention quaternion (w, v) maps to U = w - i v.sigma.
  return w * sb.sigma[0] -
         cplx(0.0, 1.0) * (x * sb.sigma[1] + y * sb.sigma[2] + z * sb.sigma[3]);
}

}  // namespace

Mat so3_section(const Eigen::Matrix3d& r) {
  // Shepperd's method: branch on the largest of the four squared components
  // of the standard (R v = q v q^-1) quaternion of r.
  const double t = r.trace();
  const double c0 = 1.0 + t;
  const double c1 = 1.0 + 2.0 * r(0, 0) - t;
  const double c2 = 1.0 + 2.0 * r(1, 1) - t;
  const double c3 = 1.0 + 2.0 * r(2, 2) - t;

  double w, x, y, z;
  if (c0 >= c1 && c0 >= c2 && c0 >= c3) {
    w = 0.5 * std::sqrt(c0);
    x = (r(2, 1) - r(1, 2)) / (4.0 * w);
    y = (r(0, 2) - r(2, 0)) / (4.0 * w);
    z = (r(1, 0) - r(0, 1)) / (4.0 * w);
  } else if (c1 >= c2 && c1 >= c3) {
    x = 0.5 * std::sqrt(c1);
    w = (r(2, 1) - r(1, 2)) / (4.0 * x);
    y = (r(0, 1) + r(1, 0)) / (4.0 * x);
    z = (r(0, 2) + r(2, 0)) / (4.0 * x);
  } else if (c2 >= c3) {
    y = 0.5 * std::sqrt(c2);
    w = (r(0, 2) - r(2, 0)) / (4.0 * y);
    x = (r(0, 1) + r(1, 0)) / (4.0 * y);
    z = (r(1, 2) + r(2, 1)) / (4.0 * y);
  } else {
    z = 0.5 * std::sqrt(c3);
    w = (r(1, 0) - r(0, 1)) / (4.0 * z);
    x = (r(0, 2) + r(2, 0)) / (4.0 * z);
    y = (r(1, 2) + r(2, 1)) / (4.0 * z);
  }

  // Deterministic branch of the double cover: first component of magnitude
  // above a fixed threshold is made positive.
  for (double* q : {&w, &x, &y, &z}) {
    if (std::abs(*q) > 1e-8) {
      if (*q < 0.0) {
        w = -w;
        x = -x;
        y = -y;
        z = -z;
      }
      break;
    }
  }
  return quaternion_to_su2(w, x, y, z);
}

Su2So3Report su2_so3_module_check(int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("crossed_module: need samples >= 1");
  SplitMix64 rng(seed);
  const SpinBasis sb = SpinBasis::standard();

  auto random_su2 = [&] {
    Mat hmat = Mat::Zero(2, 2);
    for (int k = 1; k <= 3; ++k) hmat += rng.next_symmetric(2.0) * 0.5 * sb.sigma[k];
    Eigen::SelfAdjointEigenSolver<Mat> es(hmat);
    const Mat iexp =
        (cplx(0.0, 1.0) * es.eigenvalues().array().cast<cplx>()).exp().matrix().asDiagonal();
    return Mat(es.eigenvectors() * iexp * es.eigenvectors().adjoint());
  };

  Su2So3Report rep;
  rep.samples = samples;
  for (int s = 0; s < samples; ++s) {
    const Mat u = random_su2();
    const Mat v = random_su2();
    const Mat w = random_su2();
    const Eigen::Matrix3d ru = su2_to_so3(u);
    const Eigen::Matrix3d rv = su2_to_so3(v);
    const Eigen::Matrix3d rg = su2_to_so3(w);  // a generic SO(3) point

    rep.delta_hom_residual = std::max(
        rep.delta_hom_residual,
        (su2_to_so3(Mat(u * v)) - Eigen::Matrix3d(ru * rv)).cwiseAbs().maxCoeff());
    rep.section_residual =
        std::max(rep.section_residual,
                 (su2_to_so3(so3_section(rg)) - rg).cwiseAbs().maxCoeff());

    // Peiffer: u^{delta(v)} = s(R(v))^-1 u s(R(v)) must equal v^-1 u v.
    const Mat sv = so3_section(rv);
    const Mat lhs1 = sv.adjoint() * u * sv;
    const Mat rhs1 = v.adjoint() * u * v;
    rep.peiffer_residual =
        std::max(rep.peiffer_residual, (lhs1 - rhs1).cwiseAbs().maxCoeff());

    // Equivariance: delta(u^g) = g^-1 delta(u) g for g = rg.
    const Mat sg = so3_section(rg);
    const Eigen::Matrix3d lhs2 = su2_to_so3(Mat(sg.adjoint() * u * sg));
    const Eigen::Matrix3d rhs2 = rg.transpose() * ru * rg;
    rep.equivariance_residual =
        std::max(rep.equivariance_residual, (lhs2 - rhs2).cwiseAbs().maxCoeff());
  }
  return rep;
}

}  // namespace anomaly
