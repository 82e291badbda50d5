#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "manyopt/variation.hpp"

using namespace manyopt;

namespace {

Bounds unit_bounds(int n) {
  Bounds b;
  b.lower.assign(n, 0.0);
  b.upper.assign(n, 1.0);
  return b;
}

}  // namespace

TEST_SUITE("variation") {

TEST_CASE("spread factor and mutation offset on hand-evaluated draws") {
  // u = 0.5 sits exactly on the branch boundary: beta = 1, delta = 0
  CHECK(sbx_spread_factor(0.5, 20.0) == doctest::Approx(1.0));
  CHECK(pm_delta(0.5, 20.0) == doctest::Approx(0.0));

  CHECK(sbx_spread_factor(0.25, 20.0) ==
        doctest::Approx(std::pow(0.5, 1.0 / 21.0)).epsilon(1e-15));
  CHECK(pm_delta(0.9, 20.0) ==
        doctest::Approx(1.0 - std::pow(0.2, 1.0 / 21.0)).epsilon(1e-15));

  // u -> 0 drives the variable all the way to its lower bound
  CHECK(pm_delta(0.0, 20.0) == doctest::Approx(-1.0));
  CHECK(pm_delta(1e-12, 20.0) < -0.7);
}

TEST_CASE("identical parents are an SBX fixed point") {
  Rng rng(7);
  const std::vector<double> parent{0.25, 0.5, 0.75};
  for (int trial = 0; trial < 20; ++trial) {
    CHECK(sbx(parent, parent, unit_bounds(3), 20.0, 1.0, rng) == parent);
  }
}

TEST_CASE("intermediate children preserve the parents' mean") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> p1(5), p2(5);
    for (int j = 0; j < 5; ++j) {
      p1[j] = rng.uniform01();
      p2[j] = rng.uniform01();
    }
    const auto [c1, c2] = sbx_pair(p1, p2, 20.0, 1.0, rng);
    for (int j = 0; j < 5; ++j) {
      CHECK(c1[j] + c2[j] == doctest::Approx(p1[j] + p2[j]).epsilon(1e-12));
    }
  }
}

TEST_CASE("crossover probability zero passes the parents through") {
  Rng rng(13);
  const std::vector<double> p1{0.1, 0.9};
  const std::vector<double> p2{0.4, 0.2};
  for (int trial = 0; trial < 20; ++trial) {
    const auto child = sbx(p1, p2, unit_bounds(2), 20.0, 0.0, rng);
    CHECK((child == p1 || child == p2));
  }
}

TEST_CASE("offspring respect bounds for any seed") {
  Bounds bounds;
  bounds.lower = {-1.0, 0.0, 10.0};
  bounds.upper = {1.0, 0.5, 20.0};
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Rng rng(seed);
    std::vector<double> p1(3), p2(3);
    for (int j = 0; j < 3; ++j) {
      p1[j] = rng.uniform(bounds.lower[j], bounds.upper[j]);
      p2[j] = rng.uniform(bounds.lower[j], bounds.upper[j]);
    }
    std::vector<double> child = sbx(p1, p2, bounds, 20.0, 1.0, rng);
    polynomial_mutation(child, bounds, 20.0, 1.0, rng);
    for (int j = 0; j < 3; ++j) {
      CHECK(child[j] >= bounds.lower[j]);
      CHECK(child[j] <= bounds.upper[j]);
    }
  }
}

TEST_CASE("mutation probability gates per variable") {
  Rng rng(5);
  std::vector<double> child{0.5, 0.5, 0.5, 0.5};
  std::vector<double> untouched = child;
  polynomial_mutation(child, unit_bounds(4), 20.0, 0.0, rng);
  CHECK(child == untouched);
  polynomial_mutation(child, unit_bounds(4), 20.0, 1.0, rng);
  CHECK(child != untouched);  // all four variables mutated; a no-op draw has measure zero
}

TEST_CASE("identical seeds reproduce identical offspring sequences") {
  const std::vector<double> p1{0.2, 0.8};
  const std::vector<double> p2{0.6, 0.3};
  Rng a(99), b(99);
  for (int trial = 0; trial < 50; ++trial) {
    auto child_a = sbx(p1, p2, unit_bounds(2), 20.0, 1.0, a);
    auto child_b = sbx(p1, p2, unit_bounds(2), 20.0, 1.0, b);
    polynomial_mutation(child_a, unit_bounds(2), 20.0, 0.5, a);
    polynomial_mutation(child_b, unit_bounds(2), 20.0, 0.5, b);
    CHECK(child_a == child_b);
  }
}

TEST_CASE("mating selection") {
  // a 6-subproblem population whose neighborhoods are {i, i+1 mod 6, i+2 mod 6}
  std::vector<std::vector<int>> neighborhoods(6);
  for (int i = 0; i < 6; ++i) {
    neighborhoods[i] = {i, (i + 1) % 6, (i + 2) % 6};
  }

  SUBCASE("first parent is the subproblem itself") {
    Rng rng(1);
    for (int i = 0; i < 6; ++i) {
      CHECK(select_mates(i, neighborhoods, 6, 0.9, rng).first == i);
    }
  }

  SUBCASE("neighbor branch always picks a non-self neighbor") {
    Rng rng(2);
    for (int trial = 0; trial < 300; ++trial) {
      const auto [first, second] = select_mates(2, neighborhoods, 6, 1.0, rng);
      CHECK(second != 2);
      CHECK((second == 3 || second == 4));
    }
  }

  SUBCASE("global branch draws from the whole population") {
    Rng rng(3);
    std::vector<int> seen(6, 0);
    for (int trial = 0; trial < 600; ++trial) {
      const auto [first, second] = select_mates(2, neighborhoods, 6, 0.0, rng);
      CHECK(second != 2);
      ++seen[second];
    }
    for (int i = 0; i < 6; ++i) {
      if (i != 2) CHECK(seen[i] > 0);  // everyone else shows up
    }
    CHECK(seen[2] == 0);
  }

  SUBCASE("self-only neighborhood falls through to the global pool") {
    std::vector<std::vector<int>> self_only(4);
    for (int i = 0; i < 4; ++i) self_only[i] = {i};
    Rng rng(4);
    for (int trial = 0; trial < 200; ++trial) {
      const auto [first, second] = select_mates(1, self_only, 4, 1.0, rng);
      CHECK(second != 1);
      CHECK(second >= 0);
      CHECK(second < 4);
    }
  }

  SUBCASE("population of one cannot mate") {
    std::vector<std::vector<int>> lone{{0}};
    Rng rng(5);
    CHECK_THROWS_AS(select_mates(0, lone, 1, 1.0, rng), std::invalid_argument);
  }
}

}  // TEST_SUITE
