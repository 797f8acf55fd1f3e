#ifndef HYPERCO_POWER_HPP
#define HYPERCO_POWER_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hyperco/baselines.hpp"
#include "hyperco/estimator.hpp"
#include "hyperco/synth.hpp"
#include "hyperco/types.hpp"

namespace hyperco {

enum class Measure { hc, hc_reverse, pearson, dcor, mcor, mic };

Measure measure_from_string(const std::string& name);
std::string measure_to_string(Measure m);

inline const std::vector<Measure>& all_measures() {
  static const std::vector<Measure> ms = {Measure::hc,   Measure::hc_reverse,
                                          Measure::pearson, Measure::dcor,
                                          Measure::mcor, Measure::mic};
  return ms;
}

// Estimator configuration shared by the harness and screening tools.
struct EstimatorBundle {
  KdeConfig kde;
  OptimizerConfig opt;
  BaselineConfig base;
};

// One detection score per measure; |r| for Pearson so that all scores are
// "larger means more dependent". Throws on degenerate input.
double score_measure(Measure m, const PairedSamples& s,
                     const EstimatorBundle& cfg, std::uint64_t seed);

struct PowerConfig {
  int n_null = 500;
  int n_alt = 500;
  double fpr = 0.05;
  std::vector<Measure> measures = all_measures();
  std::vector<MixtureSpec> sweep;  // per-point dataset shape; seeds derived
  std::uint64_t seed = 0;
  bool trials_parallel = true;
  EstimatorBundle est;
};

struct ScoreQuantiles {
  double min = 0, q25 = 0, median = 0, q75 = 0, max = 0;
};

struct PowerRow {
  Measure measure;
  std::size_t sweep_index = 0;
  double threshold = 0;  // (1-fpr) empirical quantile of null scores
  double power = 0;      // fraction of alt scores strictly above threshold
  int failed_null = 0;   // trials scored as -inf
  int failed_alt = 0;
  ScoreQuantiles null_q, alt_q;
};

struct PowerReport {
  PowerConfig cfg;
  std::vector<PowerRow> rows;
};

// For each sweep point and measure: score n_null null datasets, take the
// ceil((1-fpr)*n_null)-th order statistic as the threshold, then score
// n_alt correlated datasets; power = fraction strictly above the
// threshold. Failed trials score -inf. Deterministic given (cfg, seed).
PowerReport run_power(const PowerConfig& cfg);

// ---- gene-pathway style trend recovery -------------------------------

// Chain variables A -> B -> C -> D observed at several timepoints.
struct PathwaySeries {
  std::vector<double> timepoints;
  std::vector<std::array<VectorXd, 4>> data;  // aligned vectors per timepoint

  void validate() const;
};

// Time of the maximum score; ties broken toward the earliest time.
double argmax_time(const std::vector<std::pair<double, double>>& scores);

// Fraction of trials in which the three pairwise correlation peaks
// (A-B, B-C, C-D) occur at nondecreasing times, after subsampling
// ceil(rate * n_i) indices per timepoint without replacement.
double trend_recovery(const PathwaySeries& series, Measure measure,
                      double subsample_rate, int trials, std::uint64_t seed,
                      const EstimatorBundle& est = {});

// Synthetic chain with correlation peaks planted at the given timepoint
// indices for the three adjacent pairs.
PathwaySeries make_planted_chain(int n_per_timepoint,
                                 const std::vector<double>& timepoints,
                                 const std::array<int, 3>& peak_at,
                                 std::uint64_t seed,
                                 double peak_strength = 0.95,
                                 double off_strength = 0.2);

}  // namespace hyperco

#endif  // HYPERCO_POWER_HPP
