#ifndef HYPERCO_TYPES_HPP
#define HYPERCO_TYPES_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

// Shared data model for all estimators and harnesses. All logarithms are
// natural (nats); the hypercontractivity coefficient is a ratio of
// divergences and therefore base-invariant.

namespace hyperco {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Clipping bounds for likelihood-ratio weights.
inline constexpr double kWeightMin = 1e-6;
inline constexpr double kWeightMax = 1e6;

struct DegenerateInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InfeasiblePoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OptimizationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// n aligned real-valued observation pairs.
struct PairedSamples {
  VectorXd x;
  VectorXd y;

  PairedSamples() = default;
  PairedSamples(VectorXd xs, VectorXd ys) : x(std::move(xs)), y(std::move(ys)) {
    if (x.size() != y.size())
      throw DegenerateInput("PairedSamples: x and y lengths differ");
    if (x.size() < 2) throw DegenerateInput("PairedSamples: need n >= 2");
    if (!x.allFinite() || !y.allFinite())
      throw DegenerateInput("PairedSamples: non-finite entry");
  }

  Eigen::Index n() const { return x.size(); }
  PairedSamples swapped() const { return PairedSamples(y, x); }
};

// Likelihood ratios w_i = r_x(X_i)/p_x(X_i); the optimization variable.
// A feasible vector has w_i in [kWeightMin, kWeightMax] and mean one.
struct WeightVector {
  VectorXd w;

  WeightVector() = default;
  explicit WeightVector(VectorXd ws) : w(std::move(ws)) {
    if ((w.array() < 0.0).any())
      throw DegenerateInput("WeightVector: negative entry");
  }
  Eigen::Index n() const { return w.size(); }
};

// a(j, i) estimates p_xy(X_i, Y_j) / (p_x(X_i) p_y(Y_j)): row = output
// sample j, column = input sample i.
struct RatioMatrix {
  MatrixXd a;

  RatioMatrix() = default;
  explicit RatioMatrix(MatrixXd m) : a(std::move(m)) {
    if (a.rows() != a.cols())
      throw DegenerateInput("RatioMatrix: must be square");
    if (!a.allFinite() || (a.array() < 0.0).any())
      throw DegenerateInput("RatioMatrix: entries must be finite and >= 0");
  }
  Eigen::Index n() const { return a.rows(); }
};

struct EstimateResult {
  double value = 0.0;      // clamped to [0, 1]
  double raw_value = 0.0;  // exp(best objective), pre-clamp
  int restarts_used = 0;
  double best_objective = 0.0;  // nats
  bool converged = false;
  std::uint64_t seed = 0;
};

// Explicit joint pmf over small finite alphabets; pmf(x, y), k_x rows.
struct DiscreteJoint {
  MatrixXd pmf;

  DiscreteJoint() = default;
  explicit DiscreteJoint(MatrixXd p) : pmf(std::move(p)) {
    if (pmf.rows() < 1 || pmf.cols() < 1)
      throw DegenerateInput("DiscreteJoint: empty pmf");
    if ((pmf.array() < 0.0).any() || !pmf.allFinite())
      throw DegenerateInput("DiscreteJoint: entries must be finite and >= 0");
    if (std::abs(pmf.sum() - 1.0) > 1e-12)
      throw DegenerateInput("DiscreteJoint: pmf must sum to 1");
    if ((pmf.rowwise().sum().array() <= 0.0).any() ||
        (pmf.colwise().sum().array() <= 0.0).any())
      throw DegenerateInput("DiscreteJoint: zero marginal (constant variable)");
  }

  Eigen::Index kx() const { return pmf.rows(); }
  Eigen::Index ky() const { return pmf.cols(); }
  VectorXd px() const { return pmf.rowwise().sum(); }
  VectorXd py() const { return pmf.colwise().sum().transpose(); }
  DiscreteJoint swapped() const { return DiscreteJoint(pmf.transpose()); }
};

// H(p) = -p ln p - (1-p) ln(1-p), with 0 ln 0 = 0.
inline double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("binary_entropy: p must be in [0,1]");
  double h = 0.0;
  if (p > 0.0) h -= p * std::log(p);
  if (p < 1.0) h -= (1.0 - p) * std::log(1.0 - p);
  return h;
}

// Plug-in divergence D(r_x || p_x) = (1/n) sum_i w_i ln w_i.
// Nonnegative whenever the weights have mean one (Jensen).
inline double kl_from_weights(const WeightVector& wv) {
  const VectorXd& w = wv.w;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w[i] > 0.0) acc += w[i] * std::log(w[i]);
  return acc / static_cast<double>(w.size());
}

}  // namespace hyperco

#endif  // HYPERCO_TYPES_HPP
