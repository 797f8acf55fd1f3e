#include "hyperco/table.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace hyperco {

namespace {

// Splits one RFC-4180 record; quoted fields may contain the delimiter,
// doubled quotes, but not newlines (the loader reads line-wise).
std::vector<std::string> split_record(const std::string& line, char delim,
                                      std::size_t row_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"' && cur.empty()) {
      quoted = true;
    } else if (c == delim) {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted)
    throw ParseError("unterminated quote in row " + std::to_string(row_no));
  fields.push_back(std::move(cur));
  return fields;
}

std::string trim_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

}  // namespace

PairedSamples Table::complete_pairs(std::size_t i, std::size_t j) const {
  std::vector<double> xs, ys;
  for (const auto& row : rows)
    if (row[i] && row[j]) {
      xs.push_back(*row[i]);
      ys.push_back(*row[j]);
    }
  VectorXd x = Eigen::Map<VectorXd>(xs.data(), static_cast<Eigen::Index>(xs.size()));
  VectorXd y = Eigen::Map<VectorXd>(ys.data(), static_cast<Eigen::Index>(ys.size()));
  return PairedSamples(std::move(x), std::move(y));
}

std::size_t Table::count_complete(std::size_t i, std::size_t j) const {
  std::size_t n = 0;
  for (const auto& row : rows)
    if (row[i] && row[j]) ++n;
  return n;
}

Table load_csv(std::istream& in, const CsvOptions& options) {
  Table t;
  std::string line;
  std::size_t row_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++row_no;
    line = trim_cr(line);
    if (row_no == 1 && line.empty()) continue;
    auto fields = split_record(line, options.delimiter, row_no);
    if (!have_header) {
      if (options.header) {
        t.columns = fields;
        have_header = true;
        continue;
      }
      t.columns.resize(fields.size());
      for (std::size_t c = 0; c < fields.size(); ++c)
        t.columns[c] = "c" + std::to_string(c);
      have_header = true;
    }
    if (fields.size() != t.columns.size())
      throw SchemaError("ragged row " + std::to_string(row_no) + ": expected " +
                        std::to_string(t.columns.size()) + " fields, got " +
                        std::to_string(fields.size()));
    std::vector<std::optional<double>> row(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      const std::string& f = fields[c];
      if (std::find(options.missing_tokens.begin(), options.missing_tokens.end(),
                    f) != options.missing_tokens.end())
        continue;
      double val = 0.0;
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), val);
      if (ec != std::errc{} || ptr != f.data() + f.size())
        throw ParseError("cannot parse '" + f + "' at row " +
                         std::to_string(row_no) + ", column " +
                         t.columns[c]);
      row[c] = val;
    }
    t.rows.push_back(std::move(row));
  }
  if (t.columns.empty()) throw SchemaError("empty CSV input");
  return t;
}

Table load_csv_file(const std::string& path, const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return load_csv(in, options);
}

void write_csv(const Table& t, std::ostream& out, char delimiter) {
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out << delimiter;
    out << t.columns[c];
  }
  out << '\n';
  std::ostringstream cell;
  cell.precision(17);
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << delimiter;
      if (row[c]) {
        cell.str("");
        cell << *row[c];
        out << cell.str();
      }
    }
    out << '\n';
  }
}

void write_csv_file(const Table& t, const std::string& path, char delimiter) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  write_csv(t, out, delimiter);
}

}  // namespace hyperco
