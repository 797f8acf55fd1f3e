#ifndef HYPERCO_ESTIMATOR_HPP
#define HYPERCO_ESTIMATOR_HPP

#include <cstdint>

#include "hyperco/density.hpp"
#include "hyperco/types.hpp"

namespace hyperco {

struct OptimizerConfig {
  int restarts = 10;
  int max_iters = 500;
  double step_size = 0.1;
  double init_noise_sigma2 = 0.01;
  double tol = 1e-6;  // relative objective change
  std::uint64_t seed = 0;
  double d_x_floor = 1e-4;
  double epsilon_floor = 1e-12;  // floor on v before ln
};

// ln(D_y) - ln(D_x) with
//   v_j = (1/n) sum_i a(j, i) w_i          (floored at epsilon_floor)
//   D_y = (1/n) sum_j u_j ln u_j,  u = v / mean(v)
//   D_x = (1/n) sum_i w_i ln w_i
// exp(objective) is the s-hat candidate. Throws InfeasiblePoint when
// D_x < d_x_floor or D_y <= 0.
//
// Notes on normalization: the matrix shorthand v = A^T w elides the
// empirical averaging; the 1/n in v_j is fixed here and used throughout.
// D_y self-normalizes v (population mean(v) = 1, so this is a no-op in
// the limit); without it, finite-sample deviation of the estimated
// matrix's column means from 1 contributes a term linear in (w - 1) and
// the divergence ratio diverges as the perturbation shrinks.
double objective(const WeightVector& w, const RatioMatrix& a,
                 double d_x_floor = 1e-4, double epsilon_floor = 1e-12);

// Euclidean gradient of the objective. With S = sum(v), T = sum(v ln v):
//   g_i = [sum_j a(j, i)(ln(v_j)/S - T/S^2)/n] / D_y - [(ln w_i + 1)/n] / D_x
VectorXd gradient(const WeightVector& w, const RatioMatrix& a,
                  double d_x_floor = 1e-4, double epsilon_floor = 1e-12);

// Euclidean projection onto {w : w_i in [kWeightMin, kWeightMax],
// (1/n) sum w_i = 1}; idempotent.
WeightVector project(const VectorXd& w_raw);

// Projected gradient ascent with random restarts over a given ratio matrix.
// Each restart initializes w_i = 1 + N(0, init_noise_sigma2), then takes
// backtracking ascent steps (base step halved on objective decrease).
// Returns max over restarts of exp(objective), clamped to [0, 1].
// Deterministic given (a, cfg).
EstimateResult maximize_over_weights(const RatioMatrix& a,
                                     const OptimizerConfig& cfg);

// KDE ratio matrix + weight optimization: the full s(X;Y) estimator.
EstimateResult estimate_hc(const PairedSamples& s, const KdeConfig& kde,
                           const OptimizerConfig& opt);

// s(Y;X): estimate_hc on swapped coordinates.
EstimateResult estimate_hc_reverse(const PairedSamples& s, const KdeConfig& kde,
                                   const OptimizerConfig& opt);

}  // namespace hyperco

#endif  // HYPERCO_ESTIMATOR_HPP
