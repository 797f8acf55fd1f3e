#ifndef HYPERCO_BOUNDS_HPP
#define HYPERCO_BOUNDS_HPP

#include <cmath>
#include <stdexcept>
#include <tuple>

#include "hyperco/types.hpp"

// Closed-form values and lower bounds for the canonical rare/dominant
// constructions. All in nats, floored at 0 (negative numerators only occur
// past the validity edge).

namespace hyperco {

// s(X;Y) = rho^2 for jointly Gaussian (X, Y) with Pearson correlation rho.
inline double gaussian_s(double rho) {
  if (!(std::abs(rho) < 1.0))
    throw std::domain_error("gaussian_s: need |rho| < 1");
  return rho * rho;
}

// Rare Gaussian correlation hidden in a dominant independent block:
// s >= (ln 1/(1-rho^2) + ln 1/(1+rho^2)) / (ln 1/(1-rho^2) + H(alpha)/alpha).
inline double ex1_bound(double rho, double alpha) {
  if (!(std::abs(rho) < 1.0))
    throw std::domain_error("ex1_bound: need |rho| < 1");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::domain_error("ex1_bound: need 0 < alpha <= 1");
  double r2 = rho * rho;
  double num = std::log(1.0 / (1.0 - r2)) + std::log(1.0 / (1.0 + r2));
  double den = std::log(1.0 / (1.0 - r2)) + binary_entropy(alpha) / alpha;
  if (!(den > 0.0)) return 0.0;
  return std::max(0.0, num / den);
}

// Rare uniform k-ary identity channel: s >= ln k / (ln k + ln(1/alpha)).
inline double ex2_bound(int k, double alpha) {
  if (k < 2) throw std::domain_error("ex2_bound: need k >= 2");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::domain_error("ex2_bound: need 0 < alpha <= 1");
  double lk = std::log(static_cast<double>(k));
  return lk / (lk + std::log(1.0 / alpha));
}

// Rare k-ary channel with symbol-corruption noise eps:
// s >= (ln k - H(eps) - eps ln(k-1)) / ln(k/alpha).
inline double ex3_bound(int k, double alpha, double eps) {
  if (k < 2) throw std::domain_error("ex3_bound: need k >= 2");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::domain_error("ex3_bound: need 0 < alpha <= 1");
  double emax = static_cast<double>(k - 1) / k;
  if (!(eps >= 0.0 && eps <= emax))
    throw std::domain_error("ex3_bound: need 0 <= eps <= (k-1)/k");
  double num = std::log(static_cast<double>(k)) - binary_entropy(eps) -
               eps * std::log(static_cast<double>(k - 1));
  return std::max(0.0, num / std::log(static_cast<double>(k) / alpha));
}

// Same construction, maximal-correlation value (mCor, not mCor^2):
// sqrt(alpha) * (1 - k eps/(k-1)).
inline double ex3_mcor(int k, double alpha, double eps) {
  if (k < 2) throw std::domain_error("ex3_mcor: need k >= 2");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::domain_error("ex3_mcor: need 0 < alpha <= 1");
  double emax = static_cast<double>(k - 1) / k;
  if (!(eps >= 0.0 && eps <= emax))
    throw std::domain_error("ex3_mcor: need 0 <= eps <= (k-1)/k");
  return std::max(0.0, std::sqrt(alpha) *
                           (1.0 - static_cast<double>(k) * eps / (k - 1)));
}

// Mixture-level predictions for the rare/dominant construction with rare
// mass alpha: (sqrt(alpha)*mcor_r, alpha*dcor_r, alpha*mic_r). The MIC
// entry is an upper bound, not an equality.
inline std::tuple<double, double, double> theorem2_scalings(double alpha,
                                                            double mcor_r,
                                                            double dcor_r,
                                                            double mic_r) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::domain_error("theorem2_scalings: need 0 < alpha <= 1");
  for (double b : {mcor_r, dcor_r, mic_r})
    if (!(b >= 0.0 && b <= 1.0))
      throw std::domain_error("theorem2_scalings: base values must be in [0,1]");
  return {std::sqrt(alpha) * mcor_r, alpha * dcor_r, alpha * mic_r};
}

}  // namespace hyperco

#endif  // HYPERCO_BOUNDS_HPP
