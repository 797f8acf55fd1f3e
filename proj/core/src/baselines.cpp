#include "hyperco/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hyperco/oracle.hpp"

namespace hyperco {

namespace {

void require_nonconstant(const VectorXd& v, const char* what) {
  if ((v.array() == v[0]).all())
    throw DegenerateInput(std::string(what) + ": constant column");
}

// empirical joint pmf from bin assignments
MatrixXd joint_counts(const std::vector<int>& bx, const std::vector<int>& by,
                      int a, int b) {
  MatrixXd p = MatrixXd::Zero(a, b);
  for (std::size_t i = 0; i < bx.size(); ++i)
    p(bx[i], by[i]) += 1.0;
  p /= static_cast<double>(bx.size());
  return p;
}

}  // namespace

std::vector<int> equal_frequency_bins(const VectorXd& v, int bins) {
  const auto n = static_cast<std::size_t>(v.size());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[static_cast<Eigen::Index>(a)] < v[static_cast<Eigen::Index>(b)]; });
  std::vector<int> bin(n);
  for (std::size_t r = 0; r < n; ++r)
    bin[order[r]] = static_cast<int>(r * static_cast<std::size_t>(bins) / n);
  return bin;
}

double pearson(const PairedSamples& s) {
  require_nonconstant(s.x, "pearson");
  require_nonconstant(s.y, "pearson");
  VectorXd cx = s.x.array() - s.x.mean();
  VectorXd cy = s.y.array() - s.y.mean();
  double denom = std::sqrt(cx.squaredNorm() * cy.squaredNorm());
  if (!(denom > 0.0)) throw DegenerateInput("pearson: zero variance");
  return std::clamp(cx.dot(cy) / denom, -1.0, 1.0);
}

double dcor(const PairedSamples& s) {
  const Eigen::Index n = s.n();
  if (n < 4) throw DegenerateInput("dcor: need n >= 4");
  require_nonconstant(s.x, "dcor");
  require_nonconstant(s.y, "dcor");

  auto centered_dist = [n](const VectorXd& v) {
    MatrixXd d(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      d(i, i) = 0.0;
      for (Eigen::Index k = 0; k < i; ++k) {
        double val = std::abs(v[i] - v[k]);
        d(i, k) = val;
        d(k, i) = val;
      }
    }
    VectorXd rm = d.rowwise().mean();
    double gm = rm.mean();
    d.colwise() -= rm;
    d.rowwise() -= rm.transpose();
    d.array() += gm;
    return d;
  };

  MatrixXd ax = centered_dist(s.x);
  MatrixXd ay = centered_dist(s.y);
  const double nn = static_cast<double>(n) * static_cast<double>(n);
  double dcov2 = std::max(0.0, ax.cwiseProduct(ay).sum() / nn);
  double dvarx = std::max(0.0, ax.cwiseProduct(ax).sum() / nn);
  double dvary = std::max(0.0, ay.cwiseProduct(ay).sum() / nn);
  if (dvarx <= 0.0 || dvary <= 0.0) return 0.0;
  return std::clamp(std::sqrt(dcov2 / std::sqrt(dvarx * dvary)), 0.0, 1.0);
}

double mcor(const PairedSamples& s, const BaselineConfig& cfg) {
  require_nonconstant(s.x, "mcor");
  require_nonconstant(s.y, "mcor");
  const auto n = s.n();
  int bins = cfg.mcor_bins > 0
                 ? cfg.mcor_bins
                 : static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  if (bins < 2) throw DegenerateInput("mcor: need mcor_bins >= 2");
  if (n < 2 * static_cast<Eigen::Index>(bins))
    throw DegenerateInput("mcor: need n >= 2 * mcor_bins");
  auto bx = equal_frequency_bins(s.x, bins);
  auto by = equal_frequency_bins(s.y, bins);
  return mcor_exact(DiscreteJoint(joint_counts(bx, by, bins, bins)));
}

double mic(const PairedSamples& s, const BaselineConfig& cfg) {
  const auto n = s.n();
  if (n < 16) throw DegenerateInput("mic: need n >= 16");
  require_nonconstant(s.x, "mic");
  require_nonconstant(s.y, "mic");
  const double budget = std::pow(static_cast<double>(n), cfg.mic_exponent);
  int max_axis = cfg.mic_max_axis > 0
                     ? cfg.mic_max_axis
                     : static_cast<int>(std::floor(std::pow(static_cast<double>(n), 0.3))) + 1;

  double best = 0.0;
  for (int a = 2; a <= max_axis; ++a) {
    auto bx = equal_frequency_bins(s.x, a);
    for (int b = 2; b <= max_axis; ++b) {
      if (static_cast<double>(a) * b > budget) break;
      auto by = equal_frequency_bins(s.y, b);
      MatrixXd p = joint_counts(bx, by, a, b);
      VectorXd px = p.rowwise().sum();
      VectorXd py = p.colwise().sum().transpose();
      double info = 0.0;
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
          if (p(i, j) > 0.0)
            info += p(i, j) * std::log(p(i, j) / (px[i] * py[j]));
      best = std::max(best, info / std::log(static_cast<double>(std::min(a, b))));
    }
  }
  return std::clamp(best, 0.0, 1.0);
}

}  // namespace hyperco
