#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperco/hyperco.hpp"

using namespace hyperco;

TEST_CASE("gaussian_s") {
  CHECK(gaussian_s(0.0) == 0.0);
  CHECK(gaussian_s(0.5) == doctest::Approx(0.25));
  CHECK(gaussian_s(-0.9) == doctest::Approx(0.81));
  CHECK_THROWS_AS(gaussian_s(1.0), std::domain_error);
  CHECK_THROWS_AS(gaussian_s(-1.2), std::domain_error);
}

TEST_CASE("ex1_bound") {
  CHECK(ex1_bound(0.0, 0.3) == 0.0);
  // alpha = 1: H(1) = 0, bound = 1 - ln(1+rho^2)/ln(1/(1-rho^2))
  CHECK(ex1_bound(0.8, 1.0) == doctest::Approx(0.515755).epsilon(1e-4));
  CHECK(ex1_bound(0.9, 0.5) > ex1_bound(0.9, 0.1));
  CHECK_THROWS_AS(ex1_bound(1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(ex1_bound(0.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(ex1_bound(0.5, 1.5), std::domain_error);
}

TEST_CASE("ex2_bound") {
  CHECK(ex2_bound(2, 0.5) == doctest::Approx(0.5));
  CHECK(ex2_bound(2, 1.0) == doctest::Approx(1.0));
  CHECK(ex2_bound(4, 0.1) == doctest::Approx(0.375850).epsilon(1e-4));
  // strictly increasing in both arguments
  CHECK(ex2_bound(3, 0.25) > ex2_bound(2, 0.25));
  CHECK(ex2_bound(3, 0.5) > ex2_bound(3, 0.25));
  CHECK_THROWS_AS(ex2_bound(1, 0.5), std::domain_error);
  CHECK_THROWS_AS(ex2_bound(3, 0.0), std::domain_error);
}

TEST_CASE("ex3_bound") {
  CHECK(ex3_bound(3, 0.25, 0.0) == ex2_bound(3, 0.25));
  CHECK(ex3_bound(2, 0.5, 0.5) == doctest::Approx(0.0));
  CHECK(ex3_bound(3, 0.1, 0.1) == doctest::Approx(0.207049).epsilon(1e-4));
  CHECK_THROWS_AS(ex3_bound(3, 0.1, 0.8), std::domain_error);
  CHECK_THROWS_AS(ex3_bound(3, 0.1, -0.1), std::domain_error);
}

TEST_CASE("ex3_mcor") {
  CHECK(ex3_mcor(3, 1.0, 0.0) == doctest::Approx(1.0));
  CHECK(ex3_mcor(4, 0.5, 0.75) == doctest::Approx(0.0));
  CHECK(ex3_mcor(3, 0.1, 0.1) == doctest::Approx(0.268794).epsilon(1e-4));
  CHECK_THROWS_AS(ex3_mcor(3, 0.0, 0.1), std::domain_error);
}

TEST_CASE("theorem2_scalings") {
  auto [m1, d1, c1] = theorem2_scalings(1.0, 0.7, 0.4, 0.2);
  CHECK(m1 == doctest::Approx(0.7));
  CHECK(d1 == doctest::Approx(0.4));
  CHECK(c1 == doctest::Approx(0.2));

  auto [m2, d2, c2] = theorem2_scalings(0.25, 1.0, 0.8, 0.5);
  CHECK(m2 == doctest::Approx(0.5));
  CHECK(d2 == doctest::Approx(0.2));
  CHECK(c2 == doctest::Approx(0.125));

  CHECK_THROWS_AS(theorem2_scalings(0.0, 0.5, 0.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(theorem2_scalings(0.5, 1.5, 0.5, 0.5), std::domain_error);
}
