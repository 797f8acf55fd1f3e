#ifndef HYPERCO_BASELINES_HPP
#define HYPERCO_BASELINES_HPP

#include <vector>

#include "hyperco/types.hpp"

namespace hyperco {

struct BaselineConfig {
  int mcor_bins = 0;       // 0 -> ceil(sqrt(n))
  double mic_exponent = 0.6;  // grid budget B(n) = n^mic_exponent
  int mic_max_axis = 0;    // 0 -> floor(n^0.3) + 1
};

// Sample Pearson correlation coefficient, in [-1, 1].
double pearson(const PairedSamples& s);

// Szekely-Rizzo-Bakirov sample distance correlation, in [0, 1]:
// double-centered pairwise-distance matrices, dCov/sqrt(dVar_x dVar_y);
// 0 when either dVar vanishes.
double dcor(const PairedSamples& s);

// Maximal correlation from samples: equal-frequency binning of both axes,
// then the second singular value of the normalized empirical joint
// (Q-matrix route).
double mcor(const PairedSamples& s, const BaselineConfig& cfg = {});

// Approximate MIC over equal-frequency grids only (no optimal-partition
// search): max over shapes (a, b) with 2 <= a,b <= mic_max_axis and
// a*b <= n^mic_exponent of I(X_Q; Y_Q)/ln min(a, b). Biased low relative
// to the original dynamic-programming MIC; reported as "MIC-approx".
double mic(const PairedSamples& s, const BaselineConfig& cfg = {});

// Rank-based equal-frequency bin assignment (ties broken by sample index);
// invariant under strictly increasing maps.
std::vector<int> equal_frequency_bins(const VectorXd& v, int bins);

}  // namespace hyperco

#endif  // HYPERCO_BASELINES_HPP
