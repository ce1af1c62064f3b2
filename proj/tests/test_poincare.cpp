#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "holoproj/poincare.hpp"

using namespace holoproj;

TEST_CASE("self-consistency of truncation against the tail bound") {
  Genus1Params p;
  p.kappa = 4;
  p.tau = 1;
  p.s = 0.0;
  std::complex<double> z(0, 1);
  p.truncation = 20;
  auto v20 = genus1_poincare(z, p);
  p.truncation = 40;
  auto v40 = genus1_poincare(z, p);
  CHECK(std::abs(v40.value - v20.value) <= v20.tail_bound);
  CHECK(v40.tail_bound < v20.tail_bound);
}

TEST_CASE("tail bound decays at the comparison rate") {
  Genus1Params p;
  p.kappa = 4;
  p.tau = 1;
  p.s = 0.0;
  std::complex<double> z(0.3, 1.0);
  p.truncation = 10;
  double t10 = genus1_poincare(z, p).tail_bound;
  p.truncation = 20;
  double t20 = genus1_poincare(z, p).tail_bound;
  // p = sigma + kappa/2 = 2, tail ~ N^{-2}
  CHECK(t20 <= t10 / 3.0);
  CHECK(t20 >= t10 / 8.0);
}

TEST_CASE("modularity residual under the inversion") {
  Genus1Params p;
  p.kappa = 4;
  p.tau = 1;
  p.s = 0.0;
  p.truncation = 50;
  std::array<long, 4> inv = {0, -1, 1, 0};
  for (std::complex<double> z : {std::complex<double>(0.3, 1.0), std::complex<double>(0, 1)}) {
    auto r = modularity_residual(inv, z, p);
    CHECK(r.residual <= r.allowance);
    CHECK(r.residual < 1e-2);
  }
}

TEST_CASE("modularity residual under a translation-conjugated element") {
  Genus1Params p;
  p.kappa = 6;
  p.tau = 2;
  p.s = 0.25;
  p.truncation = 40;
  std::array<long, 4> g = {1, 0, 1, 1};
  auto r = modularity_residual(g, {0.1, 1.3}, p);
  CHECK(r.residual <= r.allowance);
}

TEST_CASE("domain errors") {
  Genus1Params p;
  p.kappa = 2;
  p.tau = 1;
  p.s = 0.0;  // Re(2s + kappa) = 2, outside
  CHECK_THROWS_AS(genus1_poincare({0, 1}, p), std::domain_error);
  p.s = 0.6;  // Re s > 1/2 suffices at kappa = 2
  CHECK_NOTHROW(genus1_poincare({0, 1}, p));
  p.kappa = 4;
  p.s = 0.0;
  CHECK_THROWS_AS(genus1_poincare({0, -1}, p), std::domain_error);
  p.tau = 0;
  CHECK_THROWS_AS(genus1_poincare({0, 1}, p), std::domain_error);
}

TEST_CASE("parallel block summation matches serial exactly") {
  Genus1Params p;
  p.kappa = 4;
  p.tau = 1;
  p.s = 0.0;
  p.truncation = 60;
  auto a = genus1_poincare({0.2, 0.9}, p);
  p.parallel = true;
  auto b = genus1_poincare({0.2, 0.9}, p);
  CHECK(a.value == b.value);
  CHECK(a.terms == b.terms);
}

TEST_CASE("negative real part of s uses the conservative bound branch") {
  Genus1Params p;
  p.kappa = 12;
  p.tau = 1;
  p.s = -1.0;
  p.truncation = 24;
  auto v24 = genus1_poincare({0, 1}, p);
  p.truncation = 48;
  auto v48 = genus1_poincare({0, 1}, p);
  CHECK(std::abs(v48.value - v24.value) <= v24.tail_bound);
}
