#include "hyperco/density.hpp"

#include <cmath>

namespace hyperco {

namespace {

double sample_std(const VectorXd& v) {
  const auto n = static_cast<double>(v.size());
  double mean = v.mean();
  double ss = (v.array() - mean).square().sum();
  return std::sqrt(ss / (n - 1.0));
}

// Gram(i, k) = exp(-0.5 ((v_i - v_k)/h)^2), normalization dropped (cancels
// in the ratio).
MatrixXd kernel_gram(const VectorXd& v, double h) {
  const Eigen::Index n = v.size();
  MatrixXd g(n, n);
  const double inv2h2 = 0.5 / (h * h);
  for (Eigen::Index i = 0; i < n; ++i) {
    g(i, i) = 1.0;
    for (Eigen::Index k = 0; k < i; ++k) {
      double d = v[i] - v[k];
      double val = std::exp(-d * d * inv2h2);
      g(i, k) = val;
      g(k, i) = val;
    }
  }
  return g;
}

double pick_bandwidth(const VectorXd& v, BandwidthRule rule, double fixed) {
  switch (rule) {
    case BandwidthRule::silverman:
      return silverman_bandwidth(v);
    case BandwidthRule::scott:
      return scott_bandwidth(v);
    case BandwidthRule::fixed:
      if (!(fixed > 0.0))
        throw DegenerateInput("KdeConfig: fixed bandwidth must be > 0");
      return fixed;
  }
  throw DegenerateInput("KdeConfig: unknown bandwidth rule");
}

}  // namespace

double silverman_bandwidth(const VectorXd& v) {
  if (v.size() < 2) throw DegenerateInput("silverman_bandwidth: need n >= 2");
  double sd = sample_std(v);
  if (!(sd > 0.0))
    throw DegenerateInput("silverman_bandwidth: zero sample variance");
  return 1.06 * sd * std::pow(static_cast<double>(v.size()), -0.2);
}

double scott_bandwidth(const VectorXd& v) {
  if (v.size() < 2) throw DegenerateInput("scott_bandwidth: need n >= 2");
  double sd = sample_std(v);
  if (!(sd > 0.0))
    throw DegenerateInput("scott_bandwidth: zero sample variance");
  return sd * std::pow(static_cast<double>(v.size()), -0.2);
}

RatioMatrix estimate_ratio_matrix(const PairedSamples& s, const KdeConfig& cfg) {
  const Eigen::Index n = s.n();
  const double hx = pick_bandwidth(s.x, cfg.bandwidth_rule, cfg.h_x);
  const double hy = pick_bandwidth(s.y, cfg.bandwidth_rule, cfg.h_y);

  MatrixXd gx = kernel_gram(s.x, hx);
  MatrixXd gy = kernel_gram(s.y, hy);
  // Leave-one-out sums. The self-term matters more here than in ordinary
  // KDE: for an isolated sample it dominates both the joint and the
  // x-marginal, so the estimated conditional at that point collapses to a
  // near-point-mass around its own y. Those phantom noiseless columns put
  // a spurious ridge near 1 in the downstream weight optimization.
  VectorXd fx = gx.rowwise().sum().array() - 1.0;
  VectorXd fy = gy.rowwise().sum().array() - 1.0;

  // num(j, i) = sum_{k not in {i, j}} gy(j, k) gx(i, k)
  MatrixXd a = gy * gx.transpose();
  const double dn = static_cast<double>(n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      double num = a(j, i) - gy(j, i) - gx(i, j);
      if (i == j) num += 1.0;  // k = i = j removed twice above
      double den = fx[i] * fy[j];
      double val = den > 0.0 ? dn * num / den : 0.0;
      a(j, i) = val > cfg.epsilon_floor ? val : cfg.epsilon_floor;
    }
  // For the true ratio, E_X[a(j, X)] = 1 for every j. Enforce that on the
  // estimate: without it the induced y-ratios at w = 1 are nonconstant, so
  // the y-divergence has a positive offset at the uniform weights and the
  // divergence ratio blows up as the perturbation shrinks.
  for (Eigen::Index j = 0; j < n; ++j) a.row(j) /= a.row(j).mean();
  return RatioMatrix(std::move(a));
}

RatioMatrix exact_ratio_matrix(const DiscreteJoint& joint,
                               const std::vector<int>& xs,
                               const std::vector<int>& ys,
                               double epsilon_floor) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw DegenerateInput("exact_ratio_matrix: need aligned xs/ys, n >= 2");
  const auto n = static_cast<Eigen::Index>(xs.size());
  VectorXd px = joint.px(), py = joint.py();
  MatrixXd a(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      int xi = xs[static_cast<std::size_t>(i)];
      int yj = ys[static_cast<std::size_t>(j)];
      double val = joint.pmf(xi, yj) / (px[xi] * py[yj]);
      a(j, i) = val > epsilon_floor ? val : epsilon_floor;
    }
  // Same row calibration as the KDE path (see estimate_ratio_matrix): the
  // sample average of the true ratio over x converges to 1 for every row.
  for (Eigen::Index j = 0; j < n; ++j) a.row(j) /= a.row(j).mean();
  return RatioMatrix(std::move(a));
}

}  // namespace hyperco
