#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

std::string bin() {
  const char* p = std::getenv("HYPERCO_BIN");
  REQUIRE_MESSAGE(p != nullptr, "HYPERCO_BIN must point at the CLI binary");
  return p;
}

int run(const std::string& args) {
  int rc = std::system((bin() + " " + args).c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("bounds subcommand prints closed-form values") {
  REQUIRE(run("bounds --example 2 --k 2 --alpha 0.5 -o /tmp/hc_b1.txt") == 0);
  CHECK(std::stod(slurp("/tmp/hc_b1.txt")) == doctest::Approx(0.5));

  REQUIRE(run("bounds --example 1 --rho 0.8 --alpha 1 -o /tmp/hc_b2.txt") == 0);
  CHECK(std::stod(slurp("/tmp/hc_b2.txt")) == doctest::Approx(0.5158).epsilon(1e-3));
}

TEST_CASE("domain errors exit 2, operational errors exit 1") {
  CHECK(run("bounds --example 2 --k 1 --alpha 0.5 2>/dev/null") == 2);
  CHECK(run("bounds --example 1 --rho 1.5 2>/dev/null") == 2);
  CHECK(run("estimate /tmp/definitely_missing_file.csv 2>/dev/null") == 1);
}

TEST_CASE("synth then estimate round-trips") {
  REQUIRE(run("synth --family linear --alpha 0.05 --sigma2 0.03 --n 120 "
              "--seed 5 -o /tmp/hc_data.csv") == 0);
  REQUIRE(run("estimate /tmp/hc_data.csv --x-col x --y-col y "
              "--measures pearson dcor mic -o /tmp/hc_est.json") == 0);
  auto j = nlohmann::json::parse(slurp("/tmp/hc_est.json"));
  REQUIRE(j.contains("measures"));
  CHECK(j["measures"].contains("pearson"));
  CHECK(j["measures"].contains("dcor"));
  CHECK(j["measures"].contains("mic"));
  CHECK(j["n"].get<int>() == 120);
  double d = j["measures"]["dcor"].get<double>();
  CHECK(d >= 0.0);
  CHECK(d <= 1.0);
}

TEST_CASE("seeded runs are byte-identical") {
  const std::string synth_cmd =
      "synth --family step --alpha 0.1 --sigma2 0.05 --n 200 --seed 42 -o ";
  REQUIRE(run(synth_cmd + "/tmp/hc_s1.csv") == 0);
  REQUIRE(run(synth_cmd + "/tmp/hc_s2.csv") == 0);
  CHECK(slurp("/tmp/hc_s1.csv") == slurp("/tmp/hc_s2.csv"));

  const std::string est_cmd =
      "estimate /tmp/hc_s1.csv --x-col x --y-col y --measures hc pearson "
      "--seed 7 -o ";
  REQUIRE(run(est_cmd + "/tmp/hc_e1.json") == 0);
  REQUIRE(run(est_cmd + "/tmp/hc_e2.json") == 0);
  CHECK(slurp("/tmp/hc_e1.json") == slurp("/tmp/hc_e2.json"));
  CHECK_FALSE(slurp("/tmp/hc_e1.json").empty());
}

TEST_CASE("null synth flag produces the independent layout") {
  REQUIRE(run("synth --family linear --alpha 0.05 --n 100 --seed 3 --null "
              "-o /tmp/hc_null.csv") == 0);
  std::ifstream in("/tmp/hc_null.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "x,y");
  int rows = 0;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) ++rows;
  CHECK(rows == 100);
}
