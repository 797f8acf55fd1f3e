#ifndef HYPERCO_DENSITY_HPP
#define HYPERCO_DENSITY_HPP

#include <vector>

#include "hyperco/types.hpp"

namespace hyperco {

enum class BandwidthRule { silverman, scott, fixed };
enum class Kernel { gaussian };

struct KdeConfig {
  BandwidthRule bandwidth_rule = BandwidthRule::silverman;
  Kernel kernel = Kernel::gaussian;
  double h_x = 0.0;  // used when bandwidth_rule == fixed
  double h_y = 0.0;
  double epsilon_floor = 1e-12;
};

// 1.06 * sigma_hat * n^(-1/5). Throws DegenerateInput when sigma_hat == 0.
double silverman_bandwidth(const VectorXd& v);

// sigma_hat * n^(-1/5)
double scott_bandwidth(const VectorXd& v);

// Plug-in KDE estimate of A(j, i) = p_xy(X_i, Y_j) / (p_x(X_i) p_y(Y_j)):
//
//   a(j, i) = n * sum_{k != i,j} K_hx(x_i - x_k) K_hy(y_j - y_k)
//             / (sum_{k != i} K_hx(x_i - x_k) * sum_{k != j} K_hy(y_j - y_k))
//
// with a Gaussian product kernel; leave-one-out sums (see the .cpp for why
// the self-term is poison here), kernel normalization cancels between
// numerator and denominator. Entries are floored at cfg.epsilon_floor so
// logs downstream stay finite, then each row is divided by its mean
// (E_X[A(j, X)] = 1 holds for the true ratio).
RatioMatrix estimate_ratio_matrix(const PairedSamples& s, const KdeConfig& cfg);

// Exact density-ratio matrix for samples drawn from a known DiscreteJoint:
// a(j, i) = p(x_i, y_j) / (p(x_i) p(y_j)), floored at epsilon_floor, rows
// divided by their means (same calibration as the KDE path; near no-op
// here). xs/ys are symbol indices into the joint's alphabets.
RatioMatrix exact_ratio_matrix(const DiscreteJoint& joint,
                               const std::vector<int>& xs,
                               const std::vector<int>& ys,
                               double epsilon_floor = 1e-12);

}  // namespace hyperco

#endif  // HYPERCO_DENSITY_HPP
