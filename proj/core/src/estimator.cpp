#include "hyperco/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hyperco/rng.hpp"

namespace hyperco {

namespace {

// D_y is computed on the self-normalized ratios v / mean(v). The raw
// plug-in (1/n) sum v ln v has a spurious linear term whenever the
// estimated matrix's column means deviate from 1, which sends the
// ratio to infinity as the perturbation shrinks; normalizing v makes
// D_y a true divergence (>= 0, zero iff v is constant) and leaves the
// population quantity unchanged since E[v] = 1. Closed form:
//   D_y = sum(v ln v)/sum(v) - ln(mean(v))
struct Eval {
  double obj;
  double dx;
  double dy;
  double vsum;
  double t;  // sum v ln v
  VectorXd v;
};

Eval evaluate(const WeightVector& w, const RatioMatrix& a, double d_x_floor,
              double eps) {
  const double n = static_cast<double>(w.n());
  if (w.n() != a.n())
    throw DegenerateInput("objective: weight/matrix size mismatch");
  double dx = kl_from_weights(w);
  if (dx < d_x_floor)
    throw InfeasiblePoint("objective: D(r_x||p_x) below floor");
  VectorXd v = (a.a * w.w) / n;
  double t = 0.0, vsum = 0.0;
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    if (v[j] < eps) v[j] = eps;
    vsum += v[j];
    t += v[j] * std::log(v[j]);
  }
  double dy = t / vsum - std::log(vsum / n);
  if (dy <= 0.0) throw InfeasiblePoint("objective: D(r_y||p_y) <= 0");
  return Eval{std::log(dy) - std::log(dx), dx, dy, vsum, t, std::move(v)};
}

}  // namespace

double objective(const WeightVector& w, const RatioMatrix& a, double d_x_floor,
                 double epsilon_floor) {
  return evaluate(w, a, d_x_floor, epsilon_floor).obj;
}

VectorXd gradient(const WeightVector& w, const RatioMatrix& a, double d_x_floor,
                  double epsilon_floor) {
  Eval e = evaluate(w, a, d_x_floor, epsilon_floor);
  const double n = static_cast<double>(w.n());
  // dD_y/dv_j = ln(v_j)/S - T/S^2 for D_y = T/S - ln(S/n)
  VectorXd lv = (e.v.array().log() / e.vsum) - e.t / (e.vsum * e.vsum);
  VectorXd g = (a.a.transpose() * lv) / n / e.dy;
  for (Eigen::Index i = 0; i < g.size(); ++i) {
    double wi = std::max(w.w[i], kWeightMin);
    g[i] -= (std::log(wi) + 1.0) / n / e.dx;
  }
  return g;
}

WeightVector project(const VectorXd& w_raw) {
  if (!w_raw.allFinite()) throw DegenerateInput("project: non-finite input");
  const auto n = w_raw.size();
  const double target = static_cast<double>(n);  // sum w_i = n <=> mean 1

  auto clamped_sum = [&](double tau) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      s += std::clamp(w_raw[i] - tau, kWeightMin, kWeightMax);
    return s;
  };

  double lo = w_raw.minCoeff() - kWeightMax - 1.0;
  double hi = w_raw.maxCoeff() - kWeightMin + 1.0;
  // clamped_sum is nonincreasing in tau; bisect to machine precision
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    double mid = 0.5 * (lo + hi);
    if (clamped_sum(mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  double tau = 0.5 * (lo + hi);
  VectorXd w(n);
  for (Eigen::Index i = 0; i < n; ++i)
    w[i] = std::clamp(w_raw[i] - tau, kWeightMin, kWeightMax);
  return WeightVector(std::move(w));
}

EstimateResult maximize_over_weights(const RatioMatrix& a,
                                     const OptimizerConfig& cfg) {
  if (cfg.restarts < 1 || cfg.max_iters < 1 || !(cfg.step_size > 0.0) ||
      cfg.init_noise_sigma2 < 0.0)
    throw DegenerateInput("OptimizerConfig: invalid parameters");
  const Eigen::Index n = a.n();
  const double sigma = std::sqrt(cfg.init_noise_sigma2);

  struct RestartOut {
    double obj = -std::numeric_limits<double>::infinity();
    bool converged = false;
    bool feasible = false;
  };
  std::vector<RestartOut> outs(static_cast<std::size_t>(cfg.restarts));

#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(r)));
    VectorXd w0(n);
    for (Eigen::Index i = 0; i < n; ++i) w0[i] = 1.0 + rng.normal(0.0, sigma);
    WeightVector w = project(w0);
    double obj;
    try {
      obj = objective(w, a, cfg.d_x_floor, cfg.epsilon_floor);
    } catch (const InfeasiblePoint&) {
      continue;  // infeasible at init; recorded as a failed restart
    }
    bool converged = false;
    int quiet_iters = 0;
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
      // Normalize the ascent direction so the base step moves no weight by
      // more than step_size. Unbounded steps can teleport to box corners
      // (all mass on one sample) that look good under an estimated matrix
      // only because isolated points have near-degenerate kernel columns;
      // bounded steps keep the ascent on the smooth ridge it started in.
      VectorXd dir = gradient(w, a, cfg.d_x_floor, cfg.epsilon_floor);
      double gmax = dir.cwiseAbs().maxCoeff();
      if (gmax > 0.0) dir /= gmax;
      double step = cfg.step_size;
      bool accepted = false;
      double obj_new = obj;
      WeightVector w_new;
      for (int bt = 0; bt < 40; ++bt) {
        w_new = project(w.w + step * dir);
        try {
          obj_new = objective(w_new, a, cfg.d_x_floor, cfg.epsilon_floor);
        } catch (const InfeasiblePoint&) {
          step *= 0.5;
          continue;
        }
        if (obj_new > obj) {
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) {
        converged = true;  // no ascent direction at this resolution
        break;
      }
      double rel = (obj_new - obj) / std::max(std::abs(obj), 1e-12);
      w = std::move(w_new);
      obj = obj_new;
      if (rel < cfg.tol) {
        if (++quiet_iters >= 5) {
          converged = true;
          break;
        }
      } else {
        quiet_iters = 0;
      }
    }
    outs[static_cast<std::size_t>(r)] = {obj, converged, true};
  }

  EstimateResult res;
  res.restarts_used = cfg.restarts;
  res.seed = cfg.seed;
  bool any = false;
  for (const auto& o : outs) {
    if (!o.feasible) continue;
    if (!any || o.obj > res.best_objective) {
      res.best_objective = o.obj;
      res.converged = o.converged;
    }
    any = true;
  }
  if (!any)
    throw OptimizationFailed("maximize_over_weights: all restarts infeasible (seed " +
                             std::to_string(cfg.seed) + ")");
  res.raw_value = std::exp(res.best_objective);
  res.value = std::clamp(res.raw_value, 0.0, 1.0);
  return res;
}

EstimateResult estimate_hc(const PairedSamples& s, const KdeConfig& kde,
                           const OptimizerConfig& opt) {
  RatioMatrix a = estimate_ratio_matrix(s, kde);
  return maximize_over_weights(a, opt);
}

EstimateResult estimate_hc_reverse(const PairedSamples& s, const KdeConfig& kde,
                                   const OptimizerConfig& opt) {
  return estimate_hc(s.swapped(), kde, opt);
}

}  // namespace hyperco
