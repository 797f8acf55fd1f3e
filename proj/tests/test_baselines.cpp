#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "hyperco/hyperco.hpp"

using namespace hyperco;
using namespace hyperco::testing;

namespace {

PairedSamples permuted(const PairedSamples& s, std::uint64_t seed) {
  const auto n = s.n();
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), Eigen::Index{0});
  Rng rng(seed);
  for (std::size_t i = idx.size(); i > 1; --i)
    std::swap(idx[i - 1], idx[rng.below(i)]);
  VectorXd x(n), y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    x[i] = s.x[idx[static_cast<std::size_t>(i)]];
    y[i] = s.y[idx[static_cast<std::size_t>(i)]];
  }
  return PairedSamples(std::move(x), std::move(y));
}

}  // namespace

TEST_CASE("pearson closed cases") {
  VectorXd x(5);
  x << 1, 2, 3, 4, 5;
  CHECK(pearson(PairedSamples(x, 2.0 * x.array() + 1.0)) ==
        doctest::Approx(1.0));
  CHECK(pearson(PairedSamples(x, (-x).eval())) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(pearson(PairedSamples(x, VectorXd::Ones(5))),
                  DegenerateInput);
  auto g = gaussian_pair(5000, 0.5, 1);
  CHECK(pearson(g) == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("dcor closed cases") {
  VectorXd x(50);
  for (int i = 0; i < 50; ++i) x[i] = 0.02 * i;
  CHECK(dcor(PairedSamples(x, x)) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(dcor(uniform_indep(500, 2)) < 0.15);
  CHECK_THROWS_AS(dcor(PairedSamples(VectorXd::Ones(3).eval(),
                                     VectorXd::Ones(3).eval())),
                  DegenerateInput);

  // alpha-dilution of the rare-correlated mixture
  MixtureSpec ms;
  ms.family = FunctionFamily::linear;
  ms.alpha = 0.3;
  ms.sigma2 = 0.03;
  ms.n = 2000;
  ms.seed = 12;
  auto mix = generate(ms);
  int n_rare = static_cast<int>(std::ceil(ms.alpha * ms.n));
  PairedSamples rare(mix.x.head(n_rare).eval(), mix.y.head(n_rare).eval());
  CHECK(dcor(mix) == doctest::Approx(ms.alpha * dcor(rare)).epsilon(0.4));
  CHECK(std::abs(dcor(mix) - ms.alpha * dcor(rare)) < 0.1);
}

TEST_CASE("mcor from samples") {
  VectorXd x(1000);
  Rng rng(4);
  for (int i = 0; i < 1000; ++i) x[i] = rng.uniform();
  CHECK(mcor(PairedSamples(x, x)) > 0.9);

  auto g = gaussian_pair(5000, 0.6, 3);
  CHECK(mcor(g) == doctest::Approx(0.6).epsilon(0.17));

  // sqrt(alpha) scaling with a deterministic rare block
  MixtureSpec ms;
  ms.family = FunctionFamily::linear;
  ms.alpha = 0.25;
  ms.sigma2 = 1e-6;
  ms.n = 2000;
  ms.seed = 11;
  CHECK(std::abs(mcor(generate(ms)) - 0.5) < 0.1);

  CHECK_THROWS_AS(mcor(PairedSamples(VectorXd::Ones(100).eval(), x.head(100).eval())),
                  DegenerateInput);
}

TEST_CASE("mic approximation") {
  VectorXd x(1000);
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) x[i] = rng.uniform();
  CHECK(mic(PairedSamples(x, x)) > 0.8);
  CHECK(mic(uniform_indep(1000, 6)) < 0.25);

  // equal-frequency grids have far less small-sample inflation than the
  // optimal-partition MIC, so an independent mixture fixture scores near 0
  MixtureSpec ms;
  ms.family = FunctionFamily::linear;
  ms.alpha = 0.05;
  ms.sigma2 = 0.03;
  ms.n = 320;
  ms.correlated = false;
  ms.seed = 50;
  CHECK(mic(generate(ms)) < 0.1);

  VectorXd tiny = x.head(8).eval();
  CHECK_THROWS_AS(mic(PairedSamples(tiny, tiny)), DegenerateInput);
}

TEST_CASE("rank binning") {
  VectorXd v(6);
  v << 0.9, 0.1, 0.5, 0.3, 0.8, 0.2;
  auto b = equal_frequency_bins(v, 3);
  REQUIRE(b.size() == 6);
  CHECK(b[1] == 0);  // smallest value
  CHECK(b[0] == 2);  // largest value
  int lo = *std::min_element(b.begin(), b.end());
  int hi = *std::max_element(b.begin(), b.end());
  CHECK(lo == 0);
  CHECK(hi == 2);
}

TEST_CASE("monotone-map invariance") {
  auto s = gaussian_pair(400, 0.5, 7);
  PairedSamples t(s.x.array().exp().matrix().eval(),
                  (s.y.array() * 3.0 - 2.0).matrix().eval());
  // rank-based measures: bit-equal
  CHECK(mcor(s) == mcor(t));
  CHECK(mic(s) == mic(t));
  // affine on both axes for the metric measures
  PairedSamples u((2.0 * s.x.array() + 5.0).matrix().eval(),
                  (0.5 * s.y.array() - 1.0).matrix().eval());
  CHECK(pearson(s) == doctest::Approx(pearson(u)).epsilon(1e-9));
  CHECK(dcor(s) == doctest::Approx(dcor(u)).epsilon(1e-9));
}

TEST_CASE("permutation invariance") {
  auto s = gaussian_pair(300, 0.6, 8);
  auto p = permuted(s, 13);
  CHECK(pearson(s) == doctest::Approx(pearson(p)).epsilon(1e-12));
  CHECK(dcor(s) == doctest::Approx(dcor(p)).epsilon(1e-9));
  CHECK(mcor(s) == doctest::Approx(mcor(p)).epsilon(1e-9));
  CHECK(mic(s) == doctest::Approx(mic(p)).epsilon(1e-9));
}
