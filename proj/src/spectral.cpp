#include "anomaly/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace anomaly {

namespace {

void require_square(const Mat& m, int p, const char* what) {
  if (m.rows() != p || m.cols() != p)
    throw std::invalid_argument(std::string("spectral: bad dimensions in ") + what);
}

}  // namespace

Mat TrigPotential::eval(double theta) const {
  Mat v = mean;
  for (std::size_t m = 0; m < modes.size(); ++m) {
    const cplx ph = std::polar(1.0, (static_cast<double>(m) + 1.0) * theta);
    v += ph * modes[m] + std::conj(ph) * modes[m].adjoint();
  }
  return v;
}

Mat TrigPotential::derivative(double theta) const {
  Mat v = Mat::Zero(p, p);
  for (std::size_t m = 0; m < modes.size(); ++m) {
    const double k = static_cast<double>(m) + 1.0;
    const cplx ph = cplx(0.0, k) * std::polar(1.0, k * theta);
    v += ph * modes[m] + std::conj(ph) * modes[m].adjoint();
  }
  return v;
}

Mat TrigPotential::fourier(int k) const {
  if (k == 0) return mean;
  const std::size_t m = static_cast<std::size_t>(std::abs(k)) - 1;
  if (m >= modes.size()) return Mat::Zero(p, p);
  return k > 0 ? modes[m] : Mat(modes[m].adjoint());
}

TrigPotential TrigPotential::constant(const Mat& value) {
  TrigPotential a;
  a.p = static_cast<int>(value.rows());
  a.mean = value;
  return a;
}

TrigPotential TrigPotential::random(int p, int nmodes, SplitMix64& rng, double amp) {
  TrigPotential a;
  a.p = p;
  Mat r(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      r(i, j) = cplx(rng.next_symmetric(amp), rng.next_symmetric(amp));
  a.mean = 0.5 * (r + r.adjoint());
  for (int m = 0; m < nmodes; ++m) {
    Mat c(p, p);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j)
        c(i, j) = cplx(rng.next_symmetric(amp), rng.next_symmetric(amp));
    a.modes.push_back(c);
  }
  return a;
}

FourierDirac assemble(const TrigPotential& a, int ntrunc) {
  if (ntrunc < 1) throw std::invalid_argument("spectral: truncation must be >= 1");
  require_square(a.mean, a.p, "mean");
  for (const Mat& m : a.modes) require_square(m, a.p, "mode");

  const int nb = 2 * ntrunc + 1;
  FourierDirac op;
  op.ntrunc = ntrunc;
  op.p = a.p;
  op.matrix = Mat::Zero(nb * a.p, nb * a.p);
  for (int r = 0; r < nb; ++r) {
    const int n = r - ntrunc;
    for (int c = 0; c < nb; ++c) {
      const int k = c - ntrunc;
      Mat block = a.fourier(n - k);
      if (n == k) block += static_cast<double>(n) * Mat::Identity(a.p, a.p);
      op.matrix.block(r * a.p, c * a.p, a.p, a.p) = block;
    }
  }
  const double herm = (op.matrix - op.matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12)
    throw std::invalid_argument("spectral: assembled operator is not Hermitian");
  return op;
}

Eigen::VectorXd spectrum(const FourierDirac& op) {
  Eigen::SelfAdjointEigenSolver<Mat> es(op.matrix, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double nearest_gap_midpoint(const Eigen::VectorXd& spec, double target) {
  if (spec.size() < 2) throw std::invalid_argument("spectral: spectrum too small");
  double best = 0.5 * (spec[0] + spec[1]);
  double dist = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i + 1 < spec.size(); ++i) {
    if (spec[i + 1] - spec[i] < 1e-9) continue;  // degenerate, no usable gap
    const double mid = 0.5 * (spec[i] + spec[i + 1]);
    const double d = std::abs(mid - target);
    if (d < dist) {
      dist = d;
      best = mid;
    }
  }
  return best;
}

namespace {

int count_below(const Eigen::VectorXd& spec, double x) {
  int n = 0;
  for (Eigen::Index i = 0; i < spec.size(); ++i)
    if (spec[i] < x) ++n;
  return n;
}

double distance_to_spectrum(const Eigen::VectorXd& spec, double x) {
  double d = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < spec.size(); ++i) d = std::min(d, std::abs(spec[i] - x));
  return d;
}

// Smallest non-degenerate consecutive gap (exact repeats count as one branch).
double min_spectral_gap(const Eigen::VectorXd& spec) {
  double g = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i + 1 < spec.size(); ++i) {
    const double d = spec[i + 1] - spec[i];
    if (d > 1e-9) g = std::min(g, d);
  }
  return g;
}

}  // namespace

SpectralSlice slice_at(const FourierDirac& op, double lambda_ref, double gap_tol) {
  const Eigen::VectorXd spec = spectrum(op);
  if (distance_to_spectrum(spec, lambda_ref) < gap_tol)
    throw std::invalid_argument("spectral: reference level hits the spectrum");
  SpectralSlice s;
  s.lambda_ref = lambda_ref;
  s.dim_below = count_below(spec, lambda_ref);
  s.dim_above = static_cast<int>(spec.size()) - s.dim_below;
  return s;
}

DetCocycleReport det_dimension_cocycle(const FourierDirac& op, double lambda, double eta,
                                       double mu, double gap_tol) {
  if (!(lambda <= eta && eta <= mu))
    throw std::invalid_argument("spectral: need lambda <= eta <= mu");
  const Eigen::VectorXd spec = spectrum(op);
  for (double x : {lambda, eta, mu})
    if (distance_to_spectrum(spec, x) < gap_tol)
      throw std::invalid_argument("spectral: reference level hits the spectrum");
  auto window = [&](double lo, double hi) {
    int n = 0;
    for (Eigen::Index i = 0; i < spec.size(); ++i)
      if (spec[i] > lo && spec[i] < hi) ++n;
    return n;
  };
  DetCocycleReport r;
  r.dim_lo = window(lambda, eta);
  r.dim_hi = window(eta, mu);
  r.dim_full = window(lambda, mu);
  r.additive = (r.dim_lo + r.dim_hi == r.dim_full);
  return r;
}

FlowResult spectral_flow(const std::function<TrigPotential(double)>& path, int ntrunc,
                         double lambda_ref, int steps, double gap_tol, int max_depth) {
  if (steps < 1) throw std::invalid_argument("spectral: need at least one step");
  FlowResult result;

  auto eig_at = [&](double t) {
    const Eigen::VectorXd s = spectrum(assemble(path(t), ntrunc));
    ++result.diagonalizations;
    return s;
  };

  // Recursive interval handler; returns the below-count difference.
  std::function<int(double, const Eigen::VectorXd&, double, const Eigen::VectorXd&, int)>
      flow_on = [&](double ta, const Eigen::VectorXd& sa, double tb,
                    const Eigen::VectorXd& sb, int depth) -> int {
    if (!result.ok) return 0;
    for (const auto& [t, s] : {std::pair<double, const Eigen::VectorXd&>{ta, sa},
                               std::pair<double, const Eigen::VectorXd&>{tb, sb}}) {
      if (distance_to_spectrum(s, lambda_ref) < gap_tol) {
        result.ok = false;
        std::ostringstream os;
        os << "reference level within gap_tol of the spectrum at t = " << t;
        result.message = os.str();
        return 0;
      }
    }
    const double disp = (sa - sb).cwiseAbs().maxCoeff();
    const double gap = std::min(min_spectral_gap(sa), min_spectral_gap(sb));
    if (disp <= 0.45 * gap)
      return count_below(sa, lambda_ref) - count_below(sb, lambda_ref);
    if (depth >= max_depth) {
      result.ok = false;
      std::ostringstream os;
      os << "gap resolution failed on interval [" << ta << ", " << tb
         << "] after max refinement (displacement " << disp << ", min gap " << gap << ")";
      result.message = os.str();
      return 0;
    }
    const double tm = 0.5 * (ta + tb);
    const Eigen::VectorXd sm = eig_at(tm);
    return flow_on(ta, sa, tm, sm, depth + 1) + flow_on(tm, sm, tb, sb, depth + 1);
  };

  double tprev = 0.0;
  Eigen::VectorXd sprev = eig_at(0.0);
  int flow = 0;
  for (int i = 1; i <= steps; ++i) {
    const double t = static_cast<double>(i) / steps;
    const Eigen::VectorXd s = eig_at(t);
    flow += flow_on(tprev, sprev, t, s, 0);
    tprev = t;
    sprev = s;
    if (!result.ok) break;
  }
  result.flow = flow;
  return result;
}

double gauge_covariance_residual(const TrigPotential& a, const TrigPotential& dphi,
                                 int winding, int ntrunc) {
  if (a.p != 1 || dphi.p != 1)
    throw std::invalid_argument("spectral: gauge covariance check is the p = 1 model");
  if (std::abs(dphi.mean(0, 0)) > 1e-12)
    throw std::invalid_argument("spectral: dphi must have zero mean (single-valued phase)");

  TrigPotential ag;
  ag.p = 1;
  ag.mean = a.mean - static_cast<double>(winding) * Mat::Identity(1, 1);
  const std::size_t nm = std::max(a.modes.size(), dphi.modes.size());
  for (std::size_t m = 0; m < nm; ++m) {
    Mat c = Mat::Zero(1, 1);
    if (m < a.modes.size()) c += a.modes[m];
    if (m < dphi.modes.size()) c -= dphi.modes[m];
    ag.modes.push_back(c);
  }

  const Eigen::VectorXd s0 = spectrum(assemble(a, ntrunc));
  const Eigen::VectorXd s1 = spectrum(assemble(ag, ntrunc));

  const double center = a.mean(0, 0).real();
  const double half = 0.5 * ntrunc + 0.499;
  std::vector<double> w0, w1;
  for (Eigen::Index i = 0; i < s0.size(); ++i)
    if (std::abs(s0[i] - center) <= half) w0.push_back(s0[i]);
  for (Eigen::Index i = 0; i < s1.size(); ++i)
    if (std::abs(s1[i] - center) <= half) w1.push_back(s1[i]);
  if (w0.size() != w1.size())
    return std::numeric_limits<double>::infinity();  // window mismatch: report loudly
  double worst = 0.0;
  for (std::size_t i = 0; i < w0.size(); ++i)
    worst = std::max(worst, std::abs(w0[i] - w1[i]));
  return worst;
}

}  // namespace anomaly
