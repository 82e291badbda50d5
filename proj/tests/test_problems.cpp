#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "manyopt/problems.hpp"
#include "manyopt/rng.hpp"

using namespace manyopt;

namespace {

// Deterministic in-bounds fill used by the frozen-value cases below:
// y_j = ((7j mod 10) + 0.5) / 11, scaled into the variable's range.
std::vector<double> pattern_decision(const ProblemInstance& p) {
  std::vector<double> x(p.variables);
  for (int j = 0; j < p.variables; ++j) {
    const double y = ((j * 7) % 10 + 0.5) / 11.0;
    x[j] = p.bounds.lower[j] + y * (p.bounds.upper[j] - p.bounds.lower[j]);
  }
  return x;
}

void check_close(const std::vector<double>& actual,
                 const std::vector<double>& expected, double eps = 1e-10) {
  REQUIRE(actual.size() == expected.size());
  for (std::size_t i = 0; i < actual.size(); ++i) {
    CHECK(actual[i] == doctest::Approx(expected[i]).epsilon(eps));
  }
}

double ellipse_residual(const std::vector<double>& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double r = f[i] / (2.0 * (i + 1));
    sum += r * r;
  }
  return sum;
}

}  // namespace

TEST_SUITE("problems") {

TEST_CASE("instance parameterization") {
  CHECK(make_instance(ProblemFamily::dtlz1, 3).variables == 7);
  CHECK(make_instance(ProblemFamily::dtlz2, 3).variables == 12);
  CHECK(make_instance(ProblemFamily::dtlz3, 10).variables == 19);
  const ProblemInstance wfg = make_instance(ProblemFamily::wfg4, 3);
  CHECK(wfg.position_params == 4);
  CHECK(wfg.distance_params == 20);
  CHECK(wfg.variables == 24);
  CHECK(wfg.bounds.upper[0] == 2.0);
  CHECK(wfg.bounds.upper[23] == 48.0);
  CHECK(wfg.id() == "wfg4-m3");
  CHECK(make_instance("dtlz3", 10).id() == "dtlz3-m10");
  CHECK_THROWS_AS(make_instance("dtlz9", 3), std::invalid_argument);
}

TEST_CASE("out-of-bounds and wrong-size decisions are rejected") {
  const ProblemInstance p = make_instance(ProblemFamily::dtlz2, 3);
  std::vector<double> x(p.variables, 0.5);
  CHECK_NOTHROW(evaluate(p, x));
  x[3] = 1.5;
  CHECK_THROWS_AS(evaluate(p, x), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(p, std::vector<double>(p.variables - 1, 0.5)),
                  std::invalid_argument);
}

TEST_CASE("evaluation is pure") {
  const ProblemInstance p = make_instance(ProblemFamily::wfg9, 3);
  const std::vector<double> x = pattern_decision(p);
  CHECK(evaluate(p, x) == evaluate(p, x));
}

// Expected vectors computed with an independent evaluator written from the
// published toolkit transformation definitions.
TEST_CASE("frozen objective vectors, DTLZ") {
  check_close(evaluate(make_instance(ProblemFamily::dtlz1, 3),
                       pattern_decision(make_instance(ProblemFamily::dtlz1, 3))),
              {6.8142971219128947, 3.1800053235593517, 209.8803513549172});
  check_close(evaluate(make_instance(ProblemFamily::dtlz2, 3),
                       pattern_decision(make_instance(ProblemFamily::dtlz2, 3))),
              {0.81383264906711483, 1.4904232182076615, 0.12145348544662697});
  check_close(evaluate(make_instance(ProblemFamily::dtlz3, 3),
                       pattern_decision(make_instance(ProblemFamily::dtlz3, 3))),
              {466.2199739424521, 853.81813417355011, 69.577008104865016});
  check_close(evaluate(make_instance(ProblemFamily::dtlz4, 3),
                       pattern_decision(make_instance(ProblemFamily::dtlz4, 3))),
              {1.7024793388429753, 6.2238562079317417e-17, 1.5308535472235816e-134});
}

TEST_CASE("frozen objective vectors, WFG") {
  auto eval_pattern = [](ProblemFamily family) {
    const ProblemInstance p = make_instance(family, 3);
    return evaluate(p, pattern_decision(p));
  };
  check_close(eval_pattern(ProblemFamily::wfg1),
              {2.8112912549681748, 0.98452332369930562, 0.99535728274648172});
  check_close(eval_pattern(ProblemFamily::wfg2),
              {0.60211777639170461, 0.94462977921009506, 5.0293374683336083});
  check_close(eval_pattern(ProblemFamily::wfg4),
              {0.96783592592592405, 3.2259490970458553, 3.9561813184888019});
  check_close(eval_pattern(ProblemFamily::wfg5),
              {1.4612449691332547, 1.5942518310449207, 5.7089052771932742});
  check_close(eval_pattern(ProblemFamily::wfg6),
              {1.5484719765332766, 3.5262423338754472, 3.612054612054612});
  check_close(eval_pattern(ProblemFamily::wfg7),
              {0.99069186678373988, 2.4827933692021071, 5.3753207119499589});
  check_close(eval_pattern(ProblemFamily::wfg8),
              {0.90738003270071621, 2.4253361504843136, 5.5057206052624688});
  check_close(eval_pattern(ProblemFamily::wfg9),
              {1.5480046664705309, 1.6353307117422737, 5.4057453700148601});
}

TEST_CASE("WFG3 uses the quadratic position mapping, not the canonical one") {
  // The shipped WFG3 applies x_i = t_i*(t_i - 0.5) + 0.5 to the position
  // coordinates. The canonical toolkit instead multiplies coordinates
  // 2..M-1 by the distance coordinate (degeneracy vector A = (1,0,...,0)).
  // Both expected vectors below come from the independent evaluator; this
  // case records that the two mappings genuinely disagree and which one the
  // implementation follows.
  const ProblemInstance p = make_instance(ProblemFamily::wfg3, 3);
  const std::vector<double> f = evaluate(p, pattern_decision(p));
  const std::vector<double> quadratic_mapping = {
      0.96800344659097481, 1.585925719659754, 3.8709472345835985};
  const std::vector<double> canonical_mapping = {
      0.84228168525689184, 1.4902618043113911, 4.3916083916083926};
  check_close(f, quadratic_mapping);
  CHECK(std::abs(f[0] - canonical_mapping[0]) > 1e-3);
  CHECK(std::abs(f[2] - canonical_mapping[2]) > 1e-3);
}

TEST_CASE("DTLZ1 optimum lies on the 0.5-sum plane") {
  const ProblemInstance p = make_instance(ProblemFamily::dtlz1, 3);
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> x(p.variables, 0.5);
    x[0] = rng.uniform01();
    x[1] = rng.uniform01();
    const std::vector<double> f = evaluate(p, x);
    double sum = 0.0;
    for (double v : f) sum += v;
    CHECK(sum == doctest::Approx(0.5).epsilon(1e-9));

    // nudging a distance variable strictly worsens the sum
    std::vector<double> off = x;
    off[4] = 0.5 + 0.01 * (1 + trial % 5);
    double off_sum = 0.0;
    for (double v : evaluate(p, off)) off_sum += v;
    CHECK(off_sum > sum + 1e-9);
  }
}

TEST_CASE("DTLZ2/3/4 optima lie on the unit sphere") {
  Rng rng(22);
  for (ProblemFamily family :
       {ProblemFamily::dtlz2, ProblemFamily::dtlz3, ProblemFamily::dtlz4}) {
    for (int m : {3, 5, 8}) {
      const ProblemInstance p = make_instance(family, m);
      std::vector<double> x(p.variables, 0.5);
      for (int j = 0; j < m - 1; ++j) x[j] = rng.uniform01();
      double sum_sq = 0.0;
      for (double v : evaluate(p, x)) sum_sq += v * v;
      CHECK(sum_sq == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("DTLZ4 is DTLZ2 after the meta-variable bias") {
  const ProblemInstance p2 = make_instance(ProblemFamily::dtlz2, 3);
  const ProblemInstance p4 = make_instance(ProblemFamily::dtlz4, 3);
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> x(p2.variables);
    for (auto& v : x) v = rng.uniform01();
    std::vector<double> biased = x;
    for (int j = 0; j < 2; ++j) biased[j] = std::pow(biased[j], 100.0);
    check_close(evaluate(p4, x), evaluate(p2, biased), 1e-12);
  }
  // position variables at 1 are a fixed point of the bias
  std::vector<double> x(p2.variables, 0.5);
  x[0] = x[1] = 1.0;
  CHECK(evaluate(p4, x) == evaluate(p2, x));
}

TEST_CASE("WFG accepts the full box and the corners stay finite") {
  for (ProblemFamily family : all_problem_families()) {
    if (is_dtlz(family)) continue;
    const ProblemInstance p = make_instance(family, 3);
    for (const std::vector<double>* corner :
         {&p.bounds.lower, &p.bounds.upper}) {
      const std::vector<double> f = evaluate(p, *corner);
      for (double v : f) CHECK(std::isfinite(v));
    }
    // shapes are in [0,1], so f_i is bounded by x_M + 2i <= 1 + 2i
    const std::vector<double> f = evaluate(p, pattern_decision(p));
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(f[i] >= 0.0);
      CHECK(f[i] <= 1.0 + 2.0 * (i + 1) + 1e-9);
    }
  }
}

TEST_CASE("WFG4-7 optima lie on the 2i-radius hyper-ellipse") {
  Rng rng(24);
  for (ProblemFamily family : {ProblemFamily::wfg4, ProblemFamily::wfg5,
                               ProblemFamily::wfg6, ProblemFamily::wfg7}) {
    for (int m : {3, 5}) {
      const ProblemInstance p = make_instance(family, m);
      std::vector<double> z(p.variables);
      for (int j = 0; j < p.position_params; ++j) {
        z[j] = rng.uniform01() * p.bounds.upper[j];
      }
      for (int j = p.position_params; j < p.variables; ++j) {
        z[j] = 0.35 * p.bounds.upper[j];
      }
      CHECK(ellipse_residual(evaluate(p, z)) == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("WFG8/9 optima need their parameter-dependent construction") {
  const int m = 3;
  {
    const ProblemInstance p = make_instance(ProblemFamily::wfg8, m);
    const int k = p.position_params;
    Rng rng(25);
    std::vector<double> y(k);
    for (auto& v : y) v = rng.uniform01();
    // each optimal distance parameter depends on the mean of everything before it
    for (int i = k; i < p.variables; ++i) {
      double u = 0.0;
      for (double v : y) u += v;
      u /= y.size();
      const double tmp1 = std::abs(std::floor(0.5 - u) + 0.98 / 49.98);
      const double tmp2 = 0.02 + 49.98 * (0.98 / 49.98 - (1.0 - 2.0 * u) * tmp1);
      y.push_back(std::pow(0.35, 1.0 / tmp2));
    }
    std::vector<double> z(p.variables);
    for (int j = 0; j < p.variables; ++j) z[j] = y[j] * p.bounds.upper[j];
    CHECK(ellipse_residual(evaluate(p, z)) == doctest::Approx(1.0).epsilon(1e-8));
  }
  {
    const ProblemInstance p = make_instance(ProblemFamily::wfg9, m);
    const int k = p.position_params;
    const int n = p.variables;
    Rng rng(26);
    std::vector<double> y(n, 0.0);
    for (int j = 0; j < k; ++j) y[j] = rng.uniform01();
    y[n - 1] = 0.35;
    // built backwards: each distance parameter depends on the tail mean
    for (int i = n - 2; i >= k; --i) {
      double u = 0.0;
      for (int j = i + 1; j < n; ++j) u += y[j];
      u /= (n - 1 - i);
      y[i] = std::pow(0.35, 1.0 / (0.02 + 1.96 * u));
    }
    std::vector<double> z(n);
    for (int j = 0; j < n; ++j) z[j] = y[j] * p.bounds.upper[j];
    CHECK(ellipse_residual(evaluate(p, z)) == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("Pareto intersection points") {
  const WeightVector axis{{1.0, 0.0, 0.0}};
  CHECK(pareto_point_from_weight(ProblemFamily::dtlz1, axis) ==
        std::vector<double>{0.5, 0.0, 0.0});
  CHECK(pareto_point_from_weight(ProblemFamily::dtlz2, axis) ==
        std::vector<double>{1.0, 0.0, 0.0});

  const WeightVector centroid{{1.0 / 3, 1.0 / 3, 1.0 / 3}};
  const std::vector<double> f =
      pareto_point_from_weight(ProblemFamily::dtlz2, centroid);
  double sum_sq = 0.0;
  for (double v : f) {
    CHECK(v == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    sum_sq += v * v;
  }
  CHECK(sum_sq == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(pareto_point_from_weight(ProblemFamily::dtlz2,
                                           WeightVector{{0.0, 0.0, 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(pareto_point_from_weight(ProblemFamily::wfg4, axis),
                  std::invalid_argument);
}

}  // TEST_SUITE
