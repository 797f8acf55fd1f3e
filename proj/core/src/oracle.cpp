#include "hyperco/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include <Eigen/SVD>

namespace hyperco {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// D(r_y||p_y)/D(r_x||p_x) for a normalized candidate marginal r_x;
// -inf when D(r_x||p_x) <= c0.
double divergence_ratio(const DiscreteJoint& j, const VectorXd& px,
                        const VectorXd& py, const VectorXd& r, double c0) {
  double dx = 0.0;
  for (Eigen::Index x = 0; x < r.size(); ++x)
    if (r[x] > 0.0) dx += r[x] * std::log(r[x] / px[x]);
  if (dx <= c0) return kNegInf;

  double dy = 0.0;
  for (Eigen::Index y = 0; y < j.ky(); ++y) {
    double ry = 0.0;
    for (Eigen::Index x = 0; x < j.kx(); ++x)
      ry += r[x] * j.pmf(x, y) / px[x];
    if (ry > 0.0) dy += ry * std::log(ry / py[y]);
  }
  if (dy < 0.0) dy = 0.0;  // numerical
  return dy / dx;
}

VectorXd normalize_ratio(const VectorXd& w, const VectorXd& px) {
  VectorXd r = w.cwiseProduct(px);
  return r / r.sum();
}

}  // namespace

DiscreteJoint tensor_product(const DiscreteJoint& j) {
  const Eigen::Index kx = j.kx(), ky = j.ky();
  MatrixXd p(kx * kx, ky * ky);
  for (Eigen::Index x1 = 0; x1 < kx; ++x1)
    for (Eigen::Index x2 = 0; x2 < kx; ++x2)
      for (Eigen::Index y1 = 0; y1 < ky; ++y1)
        for (Eigen::Index y2 = 0; y2 < ky; ++y2)
          p(x1 * kx + x2, y1 * ky + y2) = j.pmf(x1, y1) * j.pmf(x2, y2);
  // guard against accumulated round-off in the sum-to-one check
  p /= p.sum();
  return DiscreteJoint(std::move(p));
}

double s_exact(const DiscreteJoint& j, const QuantGrid& grid) {
  grid.validate();
  const Eigen::Index kx = j.kx();
  if (kx > 6) throw BudgetExceeded("s_exact: k_x > 6");
  VectorXd px = j.px(), py = j.py();
  if ((px.array() <= 0.0).any() || (py.array() <= 0.0).any())
    throw DegenerateInput("s_exact: zero marginal");

  const double kd = static_cast<double>(kx) * grid.delta;
  const int nvals =
      static_cast<int>(std::floor((grid.c2 - grid.c1) / grid.delta + 1e-12)) + 1;

  // suffix bounds on the achievable remaining mass, for sum-pruning
  std::vector<double> min_rest(static_cast<std::size_t>(kx) + 1, 0.0);
  std::vector<double> max_rest(static_cast<std::size_t>(kx) + 1, 0.0);
  for (Eigen::Index x = kx - 1; x >= 0; --x) {
    min_rest[static_cast<std::size_t>(x)] =
        min_rest[static_cast<std::size_t>(x) + 1] + grid.c1 * px[x];
    max_rest[static_cast<std::size_t>(x)] =
        max_rest[static_cast<std::size_t>(x) + 1] + grid.c2 * px[x];
  }

  double best = kNegInf;
  VectorXd best_w;
  VectorXd w(kx);

  std::function<void(Eigen::Index, double)> enumerate = [&](Eigen::Index x,
                                                            double mass) {
    if (x == kx) {
      if (std::abs(mass - 1.0) > kd + 1e-12) return;
      VectorXd r = normalize_ratio(w, px);
      double val = divergence_ratio(j, px, py, r, grid.c0);
      if (val > best) {
        best = val;
        best_w = w;
      }
      return;
    }
    for (int m = 0; m < nvals; ++m) {
      double wv = grid.c1 + m * grid.delta;
      double nm = mass + wv * px[x];
      if (nm + min_rest[static_cast<std::size_t>(x) + 1] > 1.0 + kd) break;
      if (nm + max_rest[static_cast<std::size_t>(x) + 1] < 1.0 - kd) continue;
      w[x] = wv;
      enumerate(x + 1, nm);
    }
  };
  enumerate(0, 0.0);

  if (best == kNegInf) return 0.0;  // every candidate was within c0 of p_x

  // local coordinate-ascent refinement from the best grid point
  double step = grid.delta;
  const double min_step = grid.delta / 100.0;
  VectorXd cur = best_w;
  while (step >= min_step * (1.0 - 1e-12)) {
    bool improved = false;
    for (Eigen::Index x = 0; x < kx; ++x) {
      for (double sgn : {1.0, -1.0}) {
        double old = cur[x];
        double cand = std::clamp(old + sgn * step, grid.c1, grid.c2);
        if (cand == old) continue;
        cur[x] = cand;
        double val =
            divergence_ratio(j, px, py, normalize_ratio(cur, px), grid.c0);
        if (val > best) {
          best = val;
          improved = true;
        } else {
          cur[x] = old;
        }
      }
    }
    if (!improved) step *= 0.5;
  }

  return std::clamp(best, 0.0, 1.0);
}

std::pair<double, double> tensorize_check(const DiscreteJoint& j,
                                          const QuantGrid& grid) {
  if (j.kx() > 2)
    throw BudgetExceeded("tensorize_check: k_x > 2 makes the product alphabet too large");
  return {s_exact(j, grid), s_exact(tensor_product(j), grid)};
}

double mcor_exact(const DiscreteJoint& j) {
  VectorXd px = j.px(), py = j.py();
  if ((px.array() <= 0.0).any() || (py.array() <= 0.0).any())
    throw DegenerateInput("mcor_exact: zero marginal");
  if (j.kx() < 2 || j.ky() < 2) return 0.0;
  MatrixXd q = px.cwiseSqrt().cwiseInverse().asDiagonal() * j.pmf *
               py.cwiseSqrt().cwiseInverse().asDiagonal();
  Eigen::JacobiSVD<MatrixXd> svd(q);
  return std::clamp(svd.singularValues()[1], 0.0, 1.0);
}

}  // namespace hyperco
