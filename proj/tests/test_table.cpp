#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "hyperco/hyperco.hpp"

using namespace hyperco;

TEST_CASE("csv parsing with headers and missing tokens") {
  std::istringstream in("a,b,c\n1,2,3\n4,NA,6\n7,8,\n");
  Table t = load_csv(in);
  REQUIRE(t.n_cols() == 3);
  REQUIRE(t.n_rows() == 3);
  CHECK(t.columns[1] == "b");
  CHECK(t.rows[0][2].value() == 3.0);
  CHECK_FALSE(t.rows[1][1].has_value());
  CHECK_FALSE(t.rows[2][2].has_value());
}

TEST_CASE("quoted fields") {
  std::istringstream in("\"a,x\",b\n\"1\",2\n3,\"4\"\n");
  Table t = load_csv(in);
  CHECK(t.columns[0] == "a,x");
  CHECK(t.rows[0][0].value() == 1.0);
  CHECK(t.rows[1][1].value() == 4.0);
}

TEST_CASE("ragged rows and junk cells are rejected with location info") {
  std::istringstream ragged("a,b\n1,2\n3\n");
  CHECK_THROWS_AS(load_csv(ragged), SchemaError);

  std::istringstream junk("a,b\n1,2\nx,4\n");
  try {
    load_csv(junk);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("row") != std::string::npos);
  }
}

TEST_CASE("round trip preserves values exactly") {
  Table t;
  t.columns = {"u", "v"};
  t.rows = {{0.1234567890123456789, 2.0},
            {std::nullopt, -1e-17},
            {3.5, std::nullopt}};
  std::ostringstream out;
  write_csv(t, out);
  std::istringstream in(out.str());
  Table r = load_csv(in);
  REQUIRE(r.n_rows() == 3);
  CHECK(r.rows[0][0].value() == t.rows[0][0].value());
  CHECK(r.rows[1][1].value() == t.rows[1][1].value());
  CHECK_FALSE(r.rows[1][0].has_value());
  CHECK_FALSE(r.rows[2][1].has_value());
}

TEST_CASE("pairwise-complete extraction") {
  Table t;
  t.columns = {"p", "q", "r"};
  t.rows = {{1.0, 10.0, std::nullopt},
            {2.0, std::nullopt, 5.0},
            {3.0, 30.0, 6.0},
            {4.0, 40.0, 7.0}};
  CHECK(t.count_complete(0, 1) == 3);
  CHECK(t.count_complete(1, 2) == 2);
  auto s = t.complete_pairs(0, 1);
  REQUIRE(s.n() == 3);
  CHECK(s.x[0] == 1.0);
  CHECK(s.y[2] == 40.0);
}

TEST_CASE("pairwise screening") {
  Table t;
  t.columns = {"a", "b", "c"};
  Rng rng(3);
  for (int i = 0; i < 60; ++i) {
    double a = rng.uniform();
    t.rows.push_back({a, 2.0 * a + 0.01 * rng.normal(), rng.uniform()});
  }
  // knock out most of column c to force a skip
  for (int i = 0; i < 55; ++i) t.rows[static_cast<std::size_t>(i)][2].reset();

  auto report = screen_pairs(t, {Measure::pearson}, 30, 1);
  REQUIRE(report.rows.size() == 6);  // ordered pairs of 3 columns
  int skipped = 0;
  for (const auto& row : report.rows) {
    if (row.skipped) {
      ++skipped;
      CHECK(row.scores.empty());
    } else if (row.name_i == "a" && row.name_j == "b") {
      CHECK(row.scores.at(Measure::pearson) > 0.99);
    }
  }
  CHECK(skipped == 4);  // every pair touching column c

  auto again = screen_pairs(t, {Measure::pearson}, 30, 1);
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    CHECK(report.rows[i].skipped == again.rows[i].skipped);
    if (!report.rows[i].skipped)
      CHECK(report.rows[i].scores.at(Measure::pearson) ==
            again.rows[i].scores.at(Measure::pearson));
  }
}

TEST_CASE("outlier removal trajectory") {
  Table t;
  t.columns = {"x", "y"};
  Rng rng(9);
  for (int i = 0; i < 40; ++i) {
    double v = rng.uniform();
    t.rows.push_back({v, v + 0.01 * rng.normal()});
  }
  t.rows.push_back({0.5, 50.0});  // gross outlier

  auto traj = remove_and_rescore(t, 0, 1, 2, {Measure::pearson}, 1);
  REQUIRE(traj.size() == 3);  // untouched + 2 removals
  double before = traj[0].scores.at(Measure::pearson);
  double after = traj[1].scores.at(Measure::pearson);
  CHECK(after > before);  // removing the planted outlier restores the line
  CHECK(after > 0.99);
}
