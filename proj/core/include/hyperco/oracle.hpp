#ifndef HYPERCO_ORACLE_HPP
#define HYPERCO_ORACLE_HPP

#include <utility>

#include "hyperco/types.hpp"

namespace hyperco {

// Quantized, bounded search region for the brute-force oracle: ratio
// components live on the grid {c1, c1+delta, ..., c2} and candidates with
// D(r_x||p_x) <= c0 are skipped.
struct QuantGrid {
  double delta = 0.05;
  double c1 = 1e-3;
  double c2 = 20.0;
  double c0 = 1e-4;

  void validate() const {
    if (!(0.0 < c1 && c1 < 1.0 && 1.0 < c2))
      throw DegenerateInput("QuantGrid: need 0 < c1 < 1 < c2");
    if (!(c0 > 0.0)) throw DegenerateInput("QuantGrid: need c0 > 0");
    if (!(delta > 0.0 && delta <= (c2 - c1) / 2.0))
      throw DegenerateInput("QuantGrid: need 0 < delta <= (c2-c1)/2");
  }
};

// Exact (brute-force) s(X;Y) for small alphabets: enumerates ratio vectors
// w on the grid, keeps those whose induced r_x sums to 1 within k_x*delta,
// renormalizes to an exact pmf, maximizes D(r_y||p_y)/D(r_x||p_x) with
// r_y(y) = sum_x r_x(x) p(y|x), then refines the best grid point by
// coordinate ascent down to resolution delta/100.
// Throws BudgetExceeded for k_x > 6.
double s_exact(const DiscreteJoint& j, const QuantGrid& grid = {});

// (s_exact(j), s_exact(j (x) j)) for the independent two-copy joint over
// the product alphabets; equal in population (tensorization).
std::pair<double, double> tensorize_check(const DiscreteJoint& j,
                                          const QuantGrid& grid = {});

// Independent two-copy product joint over the product alphabets.
DiscreteJoint tensor_product(const DiscreteJoint& j);

// Maximal correlation: second-largest singular value of
// Q = P_x^{-1/2} P_xy P_y^{-1/2}.
double mcor_exact(const DiscreteJoint& j);

}  // namespace hyperco

#endif  // HYPERCO_ORACLE_HPP
