#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "manyopt/metrics.hpp"
#include "manyopt/rng.hpp"
#include "manyopt/weights.hpp"

using namespace manyopt;

namespace {

// Independent hypervolume oracle: inclusion-exclusion over all nonempty
// subsets. Exponential, so only for tiny fronts.
double hv_inclusion_exclusion(const Front& front, const std::vector<double>& ref) {
  const std::size_t n = front.size();
  double total = 0.0;
  for (std::size_t mask = 1; mask < (1u << n); ++mask) {
    double volume = 1.0;
    for (std::size_t d = 0; d < ref.size(); ++d) {
      double worst = 0.0;
      bool first = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(mask & (1u << i))) continue;
        worst = first ? front[i][d] : std::max(worst, front[i][d]);
        first = false;
      }
      volume *= std::max(0.0, ref[d] - worst);
    }
    total += (__builtin_popcount(mask) % 2 == 1) ? volume : -volume;
  }
  double divisor = 1.0;
  for (double z : ref) divisor *= z;
  return total / divisor;
}

Front random_front(Rng& rng, int points, int dims, const std::vector<double>& ref) {
  Front front(points, std::vector<double>(dims));
  for (auto& p : front) {
    for (int d = 0; d < dims; ++d) {
      p[d] = ref[d] * rng.uniform01();
    }
  }
  return front;
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("igd basics") {
  const Front reference = {{0.0, 0.0}, {1.0, 1.0}};
  CHECK(igd(reference, reference) == 0.0);
  CHECK(igd({{0.0, 0.0}}, reference) ==
        doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
  CHECK_THROWS_AS(igd({}, reference), std::invalid_argument);
  CHECK_THROWS_AS(igd(reference, {}), std::invalid_argument);
}

TEST_CASE("igd never grows when the solution set grows") {
  Rng rng(31);
  const std::vector<double> box{1.0, 1.0, 1.0};
  for (int trial = 0; trial < 100; ++trial) {
    const Front reference = random_front(rng, 8, 3, box);
    Front solution = random_front(rng, 5, 3, box);
    const double before = igd(solution, reference);
    solution.push_back({5.0, 5.0, 5.0});  // dominated far point
    CHECK(igd(solution, reference) <= before + 1e-15);
    solution.push_back(random_front(rng, 1, 3, box)[0]);
    CHECK(igd(solution, reference) <= before + 1e-15);
  }
}

TEST_CASE("analytic reference sets") {
  const WeightSet weights = generate_simplex_lattice(3, 12);
  const Front dtlz1_ref = reference_set(ProblemFamily::dtlz1, weights);
  REQUIRE(dtlz1_ref.size() == 91);
  for (const auto& r : dtlz1_ref) {
    double sum = 0.0;
    for (double v : r) sum += v;
    CHECK(sum == doctest::Approx(0.5).epsilon(1e-12));
  }
  const Front dtlz2_ref = reference_set(ProblemFamily::dtlz2, weights);
  for (const auto& r : dtlz2_ref) {
    double sum_sq = 0.0;
    for (double v : r) sum_sq += v * v;
    CHECK(sum_sq == doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK(dtlz1_ref.back() == std::vector<double>{0.5, 0.0, 0.0});
  CHECK_THROWS_AS(reference_set(ProblemFamily::wfg1, weights), std::invalid_argument);
}

TEST_CASE("hv_exact on hand-checked fronts") {
  CHECK(hv_exact({{0.0, 0.0}}, {1.0, 1.0}) == doctest::Approx(1.0));
  CHECK(hv_exact({{0.5, 0.5}}, {1.0, 1.0}) == doctest::Approx(0.25));
  CHECK(hv_exact({{0.2, 0.6}, {0.6, 0.2}}, {1.0, 1.0}) == doctest::Approx(0.48));
  CHECK(hv_exact({{0.0, 0.0, 0.0}}, {1.0, 1.0, 1.0}) == doctest::Approx(1.0));
  CHECK(hv_exact({}, {1.0, 1.0}) == 0.0);
  CHECK_THROWS_AS(hv_exact({{0.0}}, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(hv_exact({{0.0, 0.0}}, {1.0, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(hv_exact({std::vector<double>(11, 0.0)},
                           std::vector<double>(11, 1.0)),
                  std::invalid_argument);
}

TEST_CASE("points outside the reference box contribute nothing") {
  // any coordinate at or past the reference empties that point's box
  const std::vector<double> ref{1.0, 1.0};
  const double base = hv_exact({{0.4, 0.4}}, ref);
  CHECK(hv_exact({{0.4, 0.4}, {1.2, 0.1}}, ref) == base);
  CHECK(hv_exact({{0.4, 0.4}, {1.2, 1.2}}, ref) == base);
  CHECK(hv_exact({{2.0, 3.0}}, ref) == 0.0);
  Rng rng(1);
  CHECK(hv_monte_carlo({{2.0, 3.0}}, ref, 100, rng).value == 0.0);
}

TEST_CASE("hv_exact matches inclusion-exclusion on small random fronts") {
  Rng rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const int dims = 2 + trial % 2;
    const std::vector<double> ref(dims, 1.0);
    const Front front = random_front(rng, 1 + trial % 4, dims, ref);
    CHECK(hv_exact(front, ref) ==
          doctest::Approx(hv_inclusion_exclusion(front, ref)).epsilon(1e-9));
  }
}

TEST_CASE("hypervolume monotonicity and bounds") {
  Rng rng(33);
  const std::vector<double> ref{1.0, 1.0, 1.0};
  for (int trial = 0; trial < 60; ++trial) {
    Front front = random_front(rng, 6, 3, ref);
    const double value = hv_exact(front, ref);
    CHECK(value >= 0.0);
    CHECK(value <= 1.0);

    Front larger = front;
    larger.push_back(random_front(rng, 1, 3, ref)[0]);
    CHECK(hv_exact(larger, ref) >= value - 1e-12);

    // removing a dominated point changes nothing
    Front with_dominated = front;
    std::vector<double> dominated = front[0];
    for (auto& v : dominated) v = std::min(1.0 - 1e-9, v + 1e-3);
    with_dominated.push_back(dominated);
    CHECK(hv_exact(with_dominated, ref) == doctest::Approx(value).epsilon(1e-12));
  }
}

TEST_CASE("monte-carlo hypervolume") {
  const std::vector<double> ref{1.0, 1.0, 1.0};

  SUBCASE("origin front dominates every sample") {
    Rng rng(34);
    const HvEstimate estimate = hv_monte_carlo({{0.0, 0.0, 0.0}}, ref, 1000, rng);
    CHECK(estimate.value == 1.0);
    CHECK(estimate.standard_error == 0.0);
  }

  SUBCASE("front entirely outside the box scores zero") {
    Rng rng(35);
    const HvEstimate estimate = hv_monte_carlo({{1.5, 1.5, 1.5}}, ref, 1000, rng);
    CHECK(estimate.value == 0.0);
  }

  SUBCASE("agrees with the exact value within three standard errors") {
    Rng rng(36);
    for (int trial = 0; trial < 10; ++trial) {
      const int dims = 2 + trial % 5;
      const std::vector<double> box(dims, 1.0 + trial % 3);
      const Front front = random_front(rng, 5, dims, box);
      const double exact = hv_exact(front, box);
      const HvEstimate estimate = hv_monte_carlo(front, box, 200000, rng);
      CHECK(std::abs(estimate.value - exact) <=
            3.0 * estimate.standard_error + 1e-12);
    }
  }

  SUBCASE("sample count must be positive") {
    Rng rng(37);
    CHECK_THROWS_AS(hv_monte_carlo({{0.5, 0.5, 0.5}}, ref, 0, rng),
                    std::invalid_argument);
  }
}

TEST_CASE("default reference points") {
  CHECK(default_hv_reference(ProblemFamily::dtlz1, 3) ==
        std::vector<double>{1.0, 1.0, 1.0});
  CHECK(default_hv_reference(ProblemFamily::dtlz4, 4) ==
        std::vector<double>{2.0, 2.0, 2.0, 2.0});
  CHECK(default_hv_reference(ProblemFamily::wfg2, 3) ==
        std::vector<double>{3.0, 5.0, 7.0});
}

TEST_CASE("non-domination filter") {
  const Front front = {{0.5, 0.5}, {0.3, 0.8}, {0.5, 0.5}, {0.6, 0.6}, {0.2, 0.9}};
  const Front filtered = nondominated(front);
  // (0.6,0.6) is dominated by (0.5,0.5); duplicates survive
  REQUIRE(filtered.size() == 4);
  CHECK(std::count(filtered.begin(), filtered.end(),
                   std::vector<double>{0.5, 0.5}) == 2);
  CHECK(std::count(filtered.begin(), filtered.end(),
                   std::vector<double>{0.6, 0.6}) == 0);
}

}  // TEST_SUITE
