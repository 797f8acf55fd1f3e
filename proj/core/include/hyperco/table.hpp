#ifndef HYPERCO_TABLE_HPP
#define HYPERCO_TABLE_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperco/power.hpp"
#include "hyperco/types.hpp"

namespace hyperco {

struct CsvOptions {
  char delimiter = ',';
  std::vector<std::string> missing_tokens = {"", "NA", "NaN"};
  bool header = true;
};

// Rectangular numeric table with missing cells.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;

  std::size_t n_rows() const { return rows.size(); }
  std::size_t n_cols() const { return columns.size(); }

  // aligned pairwise-complete values of two columns
  PairedSamples complete_pairs(std::size_t i, std::size_t j) const;
  std::size_t count_complete(std::size_t i, std::size_t j) const;
};

Table load_csv(std::istream& in, const CsvOptions& options = {});
Table load_csv_file(const std::string& path, const CsvOptions& options = {});
void write_csv(const Table& t, std::ostream& out, char delimiter = ',');
void write_csv_file(const Table& t, const std::string& path,
                    char delimiter = ',');

struct ScreenRow {
  std::size_t col_i = 0, col_j = 0;
  std::string name_i, name_j;
  std::size_t n_complete = 0;
  bool skipped = false;
  std::map<Measure, double> scores;  // absent on per-measure failure
  std::string note;                  // failure / skip reason
};

struct ScreenReport {
  std::vector<ScreenRow> rows;
};

// WHO-style pairwise screening: every ordered column pair restricted to
// its pairwise-complete rows; pairs with fewer than min_complete rows are
// recorded as skipped. Per-pair failures are recorded, never fatal.
ScreenReport screen_pairs(const Table& t, const std::vector<Measure>& measures,
                          int min_complete, std::uint64_t seed,
                          const EstimatorBundle& est = {});

// Outlier-sensitivity trajectory for one pair: iteratively removes the
// sample farthest (in standardized Euclidean distance) from the
// coordinate-wise median, re-scoring after each removal. Entry 0 is the
// untouched pair.
std::vector<ScreenRow> remove_and_rescore(const Table& t, std::size_t col_i,
                                          std::size_t col_j, int drop_extreme,
                                          const std::vector<Measure>& measures,
                                          std::uint64_t seed,
                                          const EstimatorBundle& est = {});

}  // namespace hyperco

#endif  // HYPERCO_TABLE_HPP
