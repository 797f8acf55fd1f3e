#include "hyperco/power.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hyperco/rng.hpp"

namespace hyperco {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

ScoreQuantiles quantiles(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  auto at = [&](double q) {
    auto idx = static_cast<std::size_t>(q * static_cast<double>(v.size() - 1));
    return v[idx];
  };
  return {v.front(), at(0.25), at(0.5), at(0.75), v.back()};
}

}  // namespace

Measure measure_from_string(const std::string& name) {
  if (name == "hc") return Measure::hc;
  if (name == "hc_reverse" || name == "hcr") return Measure::hc_reverse;
  if (name == "pearson") return Measure::pearson;
  if (name == "dcor") return Measure::dcor;
  if (name == "mcor") return Measure::mcor;
  if (name == "mic") return Measure::mic;
  throw std::domain_error("unknown measure: " + name);
}

std::string measure_to_string(Measure m) {
  switch (m) {
    case Measure::hc: return "hc";
    case Measure::hc_reverse: return "hc_reverse";
    case Measure::pearson: return "pearson";
    case Measure::dcor: return "dcor";
    case Measure::mcor: return "mcor";
    case Measure::mic: return "mic";
  }
  throw std::domain_error("unknown measure enum");
}

double score_measure(Measure m, const PairedSamples& s,
                     const EstimatorBundle& cfg, std::uint64_t seed) {
  switch (m) {
    case Measure::hc: {
      OptimizerConfig opt = cfg.opt;
      opt.seed = seed;
      return estimate_hc(s, cfg.kde, opt).value;
    }
    case Measure::hc_reverse: {
      OptimizerConfig opt = cfg.opt;
      opt.seed = seed;
      return estimate_hc_reverse(s, cfg.kde, opt).value;
    }
    case Measure::pearson:
      return std::abs(pearson(s));
    case Measure::dcor:
      return dcor(s);
    case Measure::mcor:
      return mcor(s, cfg.base);
    case Measure::mic:
      return mic(s, cfg.base);
  }
  throw std::domain_error("score_measure: unknown measure");
}

PowerReport run_power(const PowerConfig& cfg) {
  if (!(cfg.fpr > 0.0 && cfg.fpr < 1.0))
    throw DegenerateInput("run_power: need 0 < fpr < 1");
  if (cfg.n_null < 20) throw DegenerateInput("run_power: need n_null >= 20");
  if (cfg.n_alt < 1) throw DegenerateInput("run_power: need n_alt >= 1");
  if (cfg.sweep.empty()) throw DegenerateInput("run_power: empty sweep");

  PowerReport report;
  report.cfg = cfg;

  for (std::size_t p = 0; p < cfg.sweep.size(); ++p) {
    const std::uint64_t point_seed = derive_seed(cfg.seed, p);
    const int total = cfg.n_null + cfg.n_alt;

    // Trial t < n_null is a null dataset, the rest are correlated; every
    // measure scores the same datasets.
    std::vector<std::vector<double>> scores(
        cfg.measures.size(), std::vector<double>(static_cast<std::size_t>(total)));

#pragma omp parallel for schedule(dynamic) if (cfg.trials_parallel)
    for (int t = 0; t < total; ++t) {
      MixtureSpec spec = cfg.sweep[p];
      spec.correlated = t >= cfg.n_null;
      spec.seed = derive_seed(point_seed, static_cast<std::uint64_t>(t));
      const std::uint64_t est_seed = splitmix64(spec.seed);
      PairedSamples data = generate(spec);
      for (std::size_t m = 0; m < cfg.measures.size(); ++m) {
        double sc;
        try {
          sc = score_measure(cfg.measures[m], data, cfg.est, est_seed);
        } catch (const std::exception&) {
          sc = kNegInf;
        }
        scores[m][static_cast<std::size_t>(t)] = sc;
      }
    }

    for (std::size_t m = 0; m < cfg.measures.size(); ++m) {
      std::vector<double> null_s(scores[m].begin(),
                                 scores[m].begin() + cfg.n_null);
      std::vector<double> alt_s(scores[m].begin() + cfg.n_null,
                                scores[m].end());
      std::vector<double> sorted_null = null_s;
      std::sort(sorted_null.begin(), sorted_null.end());
      auto rank = static_cast<std::size_t>(
          std::ceil((1.0 - cfg.fpr) * cfg.n_null));  // 1-based order statistic
      double threshold = sorted_null[rank - 1];

      PowerRow row;
      row.measure = cfg.measures[m];
      row.sweep_index = p;
      row.threshold = threshold;
      row.power = static_cast<double>(std::count_if(
                      alt_s.begin(), alt_s.end(),
                      [&](double v) { return v > threshold; })) /
                  static_cast<double>(alt_s.size());
      row.failed_null = static_cast<int>(
          std::count(null_s.begin(), null_s.end(), kNegInf));
      row.failed_alt =
          static_cast<int>(std::count(alt_s.begin(), alt_s.end(), kNegInf));
      row.null_q = quantiles(null_s);
      row.alt_q = quantiles(alt_s);
      report.rows.push_back(row);
    }
  }
  return report;
}

void PathwaySeries::validate() const {
  if (timepoints.size() < 2)
    throw DegenerateInput("PathwaySeries: need >= 2 timepoints");
  if (data.size() != timepoints.size())
    throw DegenerateInput("PathwaySeries: timepoint/data size mismatch");
  for (const auto& d : data) {
    auto n = d[0].size();
    for (const auto& v : d)
      if (v.size() != n || n < 2)
        throw DegenerateInput("PathwaySeries: ragged or tiny timepoint block");
  }
}

double argmax_time(const std::vector<std::pair<double, double>>& scores) {
  if (scores.empty()) throw DegenerateInput("argmax_time: empty list");
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i)
    if (scores[i].second > scores[best].second) best = i;
  return scores[best].first;
}

double trend_recovery(const PathwaySeries& series, Measure measure,
                      double subsample_rate, int trials, std::uint64_t seed,
                      const EstimatorBundle& est) {
  series.validate();
  if (!(subsample_rate > 0.0 && subsample_rate <= 1.0))
    throw std::domain_error("trend_recovery: need 0 < subsample_rate <= 1");
  if (trials < 1) throw std::domain_error("trend_recovery: need trials >= 1");

  int successes = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : successes)
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    std::array<std::vector<std::pair<double, double>>, 3> pair_scores;
    for (std::size_t i = 0; i < series.timepoints.size(); ++i) {
      const auto& block = series.data[i];
      const auto n = static_cast<std::size_t>(block[0].size());
      const auto m = static_cast<std::size_t>(
          std::ceil(subsample_rate * static_cast<double>(n)));

      std::vector<std::size_t> idx(n);
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      for (std::size_t k = 0; k < m; ++k)
        std::swap(idx[k], idx[k + rng.below(n - k)]);

      std::array<VectorXd, 4> sub;
      for (int v = 0; v < 4; ++v) {
        sub[v].resize(static_cast<Eigen::Index>(m));
        for (std::size_t k = 0; k < m; ++k)
          sub[v][static_cast<Eigen::Index>(k)] =
              block[v][static_cast<Eigen::Index>(idx[k])];
      }
      for (int pr = 0; pr < 3; ++pr) {
        double sc;
        try {
          sc = score_measure(measure, PairedSamples(sub[pr], sub[pr + 1]), est,
                             rng.next_u64());
        } catch (const std::exception&) {
          sc = kNegInf;
        }
        pair_scores[static_cast<std::size_t>(pr)].emplace_back(
            series.timepoints[i], sc);
      }
    }
    double t1 = argmax_time(pair_scores[0]);
    double t2 = argmax_time(pair_scores[1]);
    double t3 = argmax_time(pair_scores[2]);
    if (t1 <= t2 && t2 <= t3) ++successes;
  }
  return static_cast<double>(successes) / static_cast<double>(trials);
}

PathwaySeries make_planted_chain(int n_per_timepoint,
                                 const std::vector<double>& timepoints,
                                 const std::array<int, 3>& peak_at,
                                 std::uint64_t seed, double peak_strength,
                                 double off_strength) {
  if (n_per_timepoint < 4)
    throw DegenerateInput("make_planted_chain: need n >= 4");
  PathwaySeries series;
  series.timepoints = timepoints;
  for (std::size_t i = 0; i < timepoints.size(); ++i) {
    Rng rng(derive_seed(seed, i));
    std::array<VectorXd, 4> block;
    for (auto& v : block) v.resize(n_per_timepoint);
    auto strength = [&](int pair) {
      return peak_at[static_cast<std::size_t>(pair)] == static_cast<int>(i)
                 ? peak_strength
                 : off_strength;
    };
    for (int s = 0; s < n_per_timepoint; ++s) {
      block[0][s] = rng.normal();
      for (int pr = 0; pr < 3; ++pr) {
        double c = strength(pr);
        block[pr + 1][s] =
            c * block[pr][s] + std::sqrt(1.0 - c * c) * rng.normal();
      }
    }
    series.data.push_back(std::move(block));
  }
  return series;
}

}  // namespace hyperco
