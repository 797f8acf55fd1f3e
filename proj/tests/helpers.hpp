#ifndef HYPERCO_TESTS_HELPERS_HPP
#define HYPERCO_TESTS_HELPERS_HPP

#include <cmath>
#include <vector>

#include "hyperco/hyperco.hpp"

namespace hyperco::testing {

inline PairedSamples gaussian_pair(int n, double rho, std::uint64_t seed) {
  Rng rng(seed);
  VectorXd x(n), y(n);
  const double noise = std::sqrt(1.0 - rho * rho);
  for (int i = 0; i < n; ++i) {
    x[i] = rng.normal();
    y[i] = rho * x[i] + noise * rng.normal();
  }
  return PairedSamples(std::move(x), std::move(y));
}

inline PairedSamples uniform_indep(int n, std::uint64_t seed) {
  Rng rng(seed);
  VectorXd x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = rng.uniform();
    y[i] = rng.uniform();
  }
  return PairedSamples(std::move(x), std::move(y));
}

inline DiscreteJoint random_joint(int kx, int ky, std::uint64_t seed,
                                  double floor = 0.05) {
  Rng rng(seed);
  MatrixXd p(kx, ky);
  for (int i = 0; i < kx; ++i)
    for (int j = 0; j < ky; ++j) p(i, j) = floor + rng.uniform();
  p /= p.sum();
  return DiscreteJoint(std::move(p));
}

// Rare uniform k-ary identity channel diluted by a dominant independent
// symbol: P(X in rare part) = alpha, Y = X there, elsewhere Y is an
// independent copy of the rare marginal.
inline DiscreteJoint rare_identity_joint(int k, double alpha) {
  MatrixXd p = MatrixXd::Zero(k + 1, k);
  for (int x = 0; x < k; ++x) p(x, x) = alpha / k;
  for (int y = 0; y < k; ++y) p(k, y) = (1.0 - alpha) / k;
  return DiscreteJoint(std::move(p));
}

// k-ary symbol-corruption channel (uniform input): Y = X w.p. 1 - eps,
// uniform over the other k-1 symbols otherwise.
inline DiscreteJoint corruption_joint(int k, double eps) {
  MatrixXd p(k, k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      p(x, y) = (x == y ? 1.0 - eps : eps / (k - 1)) / k;
  return DiscreteJoint(std::move(p));
}

// Rare/dominant mixture over a given rare joint: rare mass alpha, dominant
// part is one extra x-symbol whose Y-conditional equals the rare Y-marginal.
inline DiscreteJoint diluted_joint(const DiscreteJoint& rare, double alpha) {
  const auto kx = rare.kx();
  const auto ky = rare.ky();
  VectorXd py = rare.py();
  MatrixXd p = MatrixXd::Zero(kx + 1, ky);
  p.topRows(kx) = alpha * rare.pmf;
  for (Eigen::Index y = 0; y < ky; ++y) p(kx, y) = (1.0 - alpha) * py[y];
  return DiscreteJoint(std::move(p));
}

// i.i.d. samples (symbol indices) from a joint pmf.
inline void sample_joint(const DiscreteJoint& j, int n, std::uint64_t seed,
                         std::vector<int>& xs, std::vector<int>& ys) {
  Rng rng(seed);
  xs.resize(n);
  ys.resize(n);
  const auto kx = j.kx(), ky = j.ky();
  for (int i = 0; i < n; ++i) {
    double u = rng.uniform(), c = 0.0;
    int x = 0, y = 0;
    bool done = false;
    for (x = 0; x < kx && !done; ++x)
      for (y = 0; y < ky && !done; ++y) {
        c += j.pmf(x, y);
        if (u < c) done = true;
      }
    xs[i] = done ? x - 1 : static_cast<int>(kx) - 1;
    ys[i] = done ? y - 1 : static_cast<int>(ky) - 1;
  }
}

inline double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  auto n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace hyperco::testing

#endif
