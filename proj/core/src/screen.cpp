#include <algorithm>
#include <cmath>
#include <vector>

#include "hyperco/rng.hpp"
#include "hyperco/table.hpp"

namespace hyperco {

namespace {

void score_pair(ScreenRow& row, const PairedSamples& data,
                const std::vector<Measure>& measures, std::uint64_t seed,
                const EstimatorBundle& est) {
  for (Measure m : measures) {
    try {
      row.scores[m] = score_measure(m, data, est, seed);
    } catch (const std::exception& e) {
      if (!row.note.empty()) row.note += "; ";
      row.note += measure_to_string(m) + ": " + e.what();
    }
  }
}

}  // namespace

ScreenReport screen_pairs(const Table& t, const std::vector<Measure>& measures,
                          int min_complete, std::uint64_t seed,
                          const EstimatorBundle& est) {
  const std::size_t k = t.n_cols();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) pairs.emplace_back(i, j);

  std::vector<ScreenRow> rows(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs[p];
    ScreenRow row;
    row.col_i = i;
    row.col_j = j;
    row.name_i = t.columns[i];
    row.name_j = t.columns[j];
    row.n_complete = t.count_complete(i, j);
    if (row.n_complete < static_cast<std::size_t>(min_complete)) {
      row.skipped = true;
      row.note = "fewer than min_complete pairwise-complete rows";
    } else {
      score_pair(row, t.complete_pairs(i, j), measures,
                 derive_seed(seed, i * k + j), est);
    }
    rows[p] = std::move(row);
  }

  ScreenReport report;
  report.rows = std::move(rows);
  return report;
}

std::vector<ScreenRow> remove_and_rescore(const Table& t, std::size_t col_i,
                                          std::size_t col_j, int drop_extreme,
                                          const std::vector<Measure>& measures,
                                          std::uint64_t seed,
                                          const EstimatorBundle& est) {
  if (drop_extreme < 0)
    throw std::domain_error("remove_and_rescore: drop_extreme must be >= 0");
  PairedSamples data = t.complete_pairs(col_i, col_j);
  if (static_cast<std::size_t>(drop_extreme) >= static_cast<std::size_t>(data.n()))
    throw std::domain_error("remove_and_rescore: drop_extreme >= n_complete");

  std::vector<double> xs(data.x.data(), data.x.data() + data.n());
  std::vector<double> ys(data.y.data(), data.y.data() + data.n());

  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
  };
  auto stdev = [](const std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    double sd = std::sqrt(ss / static_cast<double>(v.size() - 1));
    return sd > 0.0 ? sd : 1.0;
  };

  std::vector<ScreenRow> trajectory;
  for (int d = 0; d <= drop_extreme; ++d) {
    VectorXd x = Eigen::Map<VectorXd>(xs.data(), static_cast<Eigen::Index>(xs.size()));
    VectorXd y = Eigen::Map<VectorXd>(ys.data(), static_cast<Eigen::Index>(ys.size()));
    ScreenRow row;
    row.col_i = col_i;
    row.col_j = col_j;
    row.name_i = t.columns[col_i];
    row.name_j = t.columns[col_j];
    row.n_complete = xs.size();
    score_pair(row, PairedSamples(x, y), measures,
               derive_seed(seed, static_cast<std::uint64_t>(d)), est);
    trajectory.push_back(std::move(row));

    if (d == drop_extreme) break;
    double mx = median(xs), my = median(ys);
    double sx = stdev(xs), sy = stdev(ys);
    std::size_t worst = 0;
    double worst_d = -1.0;
    for (std::size_t s = 0; s < xs.size(); ++s) {
      double dx = (xs[s] - mx) / sx, dy = (ys[s] - my) / sy;
      double dist = dx * dx + dy * dy;
      if (dist > worst_d) {
        worst_d = dist;
        worst = s;
      }
    }
    xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(worst));
    ys.erase(ys.begin() + static_cast<std::ptrdiff_t>(worst));
  }
  return trajectory;
}

}  // namespace hyperco
