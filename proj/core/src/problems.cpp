#include "manyopt/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace manyopt {

namespace {

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------------------
// DTLZ
// ---------------------------------------------------------------------------

// Multimodal distance function shared by DTLZ1 and DTLZ3. Minimum 0 at
// x_i = 0.5 for every distance variable.
double dtlz_g_multimodal(const std::vector<double>& x, int first) {
  const int count = static_cast<int>(x.size()) - first;
  double sum = 0.0;
  for (std::size_t i = first; i < x.size(); ++i) {
    const double d = x[i] - 0.5;
    sum += d * d - std::cos(20.0 * kPi * d);
  }
  return 100.0 * (count + sum);
}

double dtlz_g_sphere(const std::vector<double>& x, int first) {
  double sum = 0.0;
  for (std::size_t i = first; i < x.size(); ++i) {
    const double d = x[i] - 0.5;
    sum += d * d;
  }
  return sum;
}

std::vector<double> dtlz1_objectives(const std::vector<double>& x, int m) {
  const double g = dtlz_g_multimodal(x, m - 1);
  std::vector<double> f(m, 0.5 * (1.0 + g));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m - 1 - i; ++j) {
      f[i] *= x[j];
    }
    if (i > 0) {
      f[i] *= 1.0 - x[m - 1 - i];
    }
  }
  return f;
}

// Spherical shape shared by DTLZ2-4; `position` holds the (possibly biased)
// position variables.
std::vector<double> dtlz_sphere_objectives(const std::vector<double>& position,
                                           double g, int m) {
  std::vector<double> f(m, 1.0 + g);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m - 1 - i; ++j) {
      f[i] *= std::cos(position[j] * kPi / 2.0);
    }
    if (i > 0) {
      f[i] *= std::sin(position[m - 1 - i] * kPi / 2.0);
    }
  }
  return f;
}

std::vector<double> evaluate_dtlz(const ProblemInstance& p,
                                  const std::vector<double>& x) {
  const int m = p.objectives;
  switch (p.family) {
    case ProblemFamily::dtlz1:
      return dtlz1_objectives(x, m);
    case ProblemFamily::dtlz2:
      return dtlz_sphere_objectives(x, dtlz_g_sphere(x, m - 1), m);
    case ProblemFamily::dtlz3:
      return dtlz_sphere_objectives(x, dtlz_g_multimodal(x, m - 1), m);
    case ProblemFamily::dtlz4: {
      // meta-variable mapping x -> x^100 biases the density of solutions
      std::vector<double> biased(x.begin(), x.begin() + (m - 1));
      for (auto& v : biased) {
        v = std::pow(v, 100.0);
      }
      return dtlz_sphere_objectives(biased, dtlz_g_sphere(x, m - 1), m);
    }
    default:
      throw std::logic_error("evaluate_dtlz called with a non-DTLZ family");
  }
}

// ---------------------------------------------------------------------------
// WFG transformation functions (Huband et al. toolkit definitions)
// ---------------------------------------------------------------------------

// Transformations map [0,1] to [0,1]; snap values that drift out by rounding.
double correct01(double v) {
  constexpr double eps = 1e-10;
  if (v < 0.0 && v >= -eps) return 0.0;
  if (v > 1.0 && v <= 1.0 + eps) return 1.0;
  return v;
}

double b_poly(double y, double alpha) { return correct01(std::pow(y, alpha)); }

double b_flat(double y, double a, double b, double c) {
  const double v = a + std::min(0.0, std::floor(y - b)) * a * (b - y) / b -
                   std::min(0.0, std::floor(c - y)) * (1.0 - a) * (y - c) / (1.0 - c);
  return correct01(v);
}

double b_param(double y, double u, double a, double b, double c) {
  const double v = a - (1.0 - 2.0 * u) * std::abs(std::floor(0.5 - u) + a);
  return correct01(std::pow(y, b + (c - b) * v));
}

double s_linear(double y, double a) {
  return correct01(std::abs(y - a) / std::abs(std::floor(a - y) + a));
}

double s_decept(double y, double a, double b, double c) {
  const double tmp1 = std::floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b);
  const double tmp2 = std::floor(a + b - y) * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b);
  return correct01(1.0 + (std::abs(y - a) - b) * (tmp1 + tmp2 + 1.0 / b));
}

double s_multi(double y, double a, double b, double c) {
  const double tmp1 = std::abs(y - c) / (2.0 * (std::floor(c - y) + c));
  const double tmp2 = (4.0 * a + 2.0) * kPi * (0.5 - tmp1);
  return correct01((1.0 + std::cos(tmp2) + 4.0 * b * tmp1 * tmp1) / (b + 2.0));
}

// Weighted mean of y[first..last).
double r_sum(const std::vector<double>& y, int first, int last,
             const std::vector<double>& w, int w_first) {
  double num = 0.0, den = 0.0;
  for (int i = first; i < last; ++i) {
    num += w[w_first + (i - first)] * y[i];
    den += w[w_first + (i - first)];
  }
  return correct01(num / den);
}

double r_sum_unit(const std::vector<double>& y, int first, int last) {
  double num = 0.0;
  for (int i = first; i < last; ++i) {
    num += y[i];
  }
  return correct01(num / (last - first));
}

// Non-separable reduction of y[first..last) with degree a.
double r_nonsep(const std::vector<double>& y, int first, int last, int a) {
  const int len = last - first;
  double num = 0.0;
  for (int j = 0; j < len; ++j) {
    num += y[first + j];
    for (int k = 0; k <= a - 2; ++k) {
      num += std::abs(y[first + j] - y[first + (1 + j + k) % len]);
    }
  }
  const double half_ceil = std::ceil(a / 2.0);
  const double den = (static_cast<double>(len) / a) * half_ceil *
                     (1.0 + 2.0 * a - 2.0 * half_ceil);
  return correct01(num / den);
}

// ---------------------------------------------------------------------------
// WFG shape functions; x holds the M-1 underlying position coordinates.
// ---------------------------------------------------------------------------

std::vector<double> shape_linear(const std::vector<double>& x) {
  const int m = static_cast<int>(x.size()) + 1;
  std::vector<double> h(m, 1.0);
  for (int i = 1; i <= m; ++i) {
    for (int j = 0; j < m - i; ++j) {
      h[i - 1] *= x[j];
    }
    if (i > 1) {
      h[i - 1] *= 1.0 - x[m - i];
    }
  }
  return h;
}

std::vector<double> shape_convex(const std::vector<double>& x) {
  const int m = static_cast<int>(x.size()) + 1;
  std::vector<double> h(m, 1.0);
  for (int i = 1; i <= m; ++i) {
    for (int j = 0; j < m - i; ++j) {
      h[i - 1] *= 1.0 - std::cos(x[j] * kPi / 2.0);
    }
    if (i > 1) {
      h[i - 1] *= 1.0 - std::sin(x[m - i] * kPi / 2.0);
    }
  }
  return h;
}

std::vector<double> shape_concave(const std::vector<double>& x) {
  const int m = static_cast<int>(x.size()) + 1;
  std::vector<double> h(m, 1.0);
  for (int i = 1; i <= m; ++i) {
    for (int j = 0; j < m - i; ++j) {
      h[i - 1] *= std::sin(x[j] * kPi / 2.0);
    }
    if (i > 1) {
      h[i - 1] *= std::cos(x[m - i] * kPi / 2.0);
    }
  }
  return h;
}

double shape_mixed(double x1, double alpha, double a) {
  return std::pow(1.0 - x1 - std::cos(2.0 * a * kPi * x1 + kPi / 2.0) / (2.0 * a * kPi),
                  alpha);
}

double shape_disc(double x1, double alpha, double beta, double a) {
  const double c = std::cos(a * std::pow(x1, beta) * kPi);
  return 1.0 - std::pow(x1, alpha) * c * c;
}

// ---------------------------------------------------------------------------
// WFG per-problem pipelines. `y` enters normalized to [0,1]^n; the result is
// the M-element reduced vector before the underlying-coordinate step.
// ---------------------------------------------------------------------------

std::vector<double> reduce_unit_groups(const std::vector<double>& y, int k, int m) {
  const int gap = k / (m - 1);
  std::vector<double> t(m);
  for (int i = 0; i < m - 1; ++i) {
    t[i] = r_sum_unit(y, i * gap, (i + 1) * gap);
  }
  t[m - 1] = r_sum_unit(y, k, static_cast<int>(y.size()));
  return t;
}

std::vector<double> wfg1_t(std::vector<double> y, int k, int m) {
  const int n = static_cast<int>(y.size());
  for (int i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
  for (int i = k; i < n; ++i) y[i] = b_flat(y[i], 0.8, 0.75, 0.85);
  for (int i = 0; i < n; ++i) y[i] = b_poly(y[i], 0.02);
  // weighted reduction, weight 2i for the i-th (1-based) parameter
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = 2.0 * (i + 1);
  const int gap = k / (m - 1);
  std::vector<double> t(m);
  for (int i = 0; i < m - 1; ++i) {
    t[i] = r_sum(y, i * gap, (i + 1) * gap, w, i * gap);
  }
  t[m - 1] = r_sum(y, k, n, w, k);
  return t;
}

// Shared by WFG2 and WFG3: linear distance shift, then pairwise non-separable
// reduction of the distance parameters, then unit-weight grouping.
std::vector<double> wfg2_t(std::vector<double> y, int k, int m) {
  const int n = static_cast<int>(y.size());
  const int l = n - k;
  for (int i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
  std::vector<double> reduced(k + l / 2);
  for (int i = 0; i < k; ++i) reduced[i] = y[i];
  for (int i = k; i < k + l / 2; ++i) {
    const int first = k + 2 * (i - k);
    reduced[i] = r_nonsep(y, first, first + 2, 2);
  }
  return reduce_unit_groups(reduced, k, m);
}

std::vector<double> wfg4_t(std::vector<double> y, int k, int m) {
  for (auto& v : y) v = s_multi(v, 30.0, 10.0, 0.35);
  return reduce_unit_groups(y, k, m);
}

std::vector<double> wfg5_t(std::vector<double> y, int k, int m) {
  for (auto& v : y) v = s_decept(v, 0.35, 0.001, 0.05);
  return reduce_unit_groups(y, k, m);
}

std::vector<double> wfg6_t(std::vector<double> y, int k, int m) {
  const int n = static_cast<int>(y.size());
  for (int i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
  const int gap = k / (m - 1);
  std::vector<double> t(m);
  for (int i = 0; i < m - 1; ++i) {
    t[i] = r_nonsep(y, i * gap, (i + 1) * gap, gap);
  }
  t[m - 1] = r_nonsep(y, k, n, n - k);
  return t;
}

std::vector<double> wfg7_t(std::vector<double> y, int k, int m) {
  const int n = static_cast<int>(y.size());
  std::vector<double> shifted = y;
  for (int i = 0; i < k; ++i) {
    const double u = r_sum_unit(y, i + 1, n);
    shifted[i] = b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0);
  }
  for (int i = k; i < n; ++i) shifted[i] = s_linear(shifted[i], 0.35);
  return reduce_unit_groups(shifted, k, m);
}

std::vector<double> wfg8_t(std::vector<double> y, int k, int m) {
  const int n = static_cast<int>(y.size());
  // distance parameters depend on all preceding parameters; the head sums
  // read the stage's input values, not already-shifted ones
  std::vector<double> shifted = y;
  for (int i = k; i < n; ++i) {
    const double u = r_sum_unit(y, 0, i);
    shifted[i] = b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0);
  }
  for (int i = k; i < n; ++i) shifted[i] = s_linear(shifted[i], 0.35);
  return reduce_unit_groups(shifted, k, m);
}

std::vector<double> wfg9_t(std::vector<double> y, int k, int m) {
  const int n = static_cast<int>(y.size());
  std::vector<double> shifted = y;
  for (int i = 0; i < n - 1; ++i) {
    const double u = r_sum_unit(y, i + 1, n);
    shifted[i] = b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0);
  }
  for (int i = 0; i < k; ++i) shifted[i] = s_decept(shifted[i], 0.35, 0.001, 0.05);
  for (int i = k; i < n; ++i) shifted[i] = s_multi(shifted[i], 30.0, 95.0, 0.35);
  const int gap = k / (m - 1);
  std::vector<double> t(m);
  for (int i = 0; i < m - 1; ++i) {
    t[i] = r_nonsep(shifted, i * gap, (i + 1) * gap, gap);
  }
  t[m - 1] = r_nonsep(shifted, k, n, n - k);
  return t;
}

std::vector<double> evaluate_wfg(const ProblemInstance& p,
                                 const std::vector<double>& z) {
  const int m = p.objectives;
  const int k = p.position_params;
  const int n = p.variables;
  // working parameters normalized to the unit hypercube
  std::vector<double> y(n);
  for (int i = 0; i < n; ++i) {
    y[i] = z[i] / (2.0 * (i + 1));
  }

  std::vector<double> t;
  switch (p.family) {
    case ProblemFamily::wfg1: t = wfg1_t(std::move(y), k, m); break;
    case ProblemFamily::wfg2:
    case ProblemFamily::wfg3: t = wfg2_t(std::move(y), k, m); break;
    case ProblemFamily::wfg4: t = wfg4_t(std::move(y), k, m); break;
    case ProblemFamily::wfg5: t = wfg5_t(std::move(y), k, m); break;
    case ProblemFamily::wfg6: t = wfg6_t(std::move(y), k, m); break;
    case ProblemFamily::wfg7: t = wfg7_t(std::move(y), k, m); break;
    case ProblemFamily::wfg8: t = wfg8_t(std::move(y), k, m); break;
    case ProblemFamily::wfg9: t = wfg9_t(std::move(y), k, m); break;
    default:
      throw std::logic_error("evaluate_wfg called with a non-WFG family");
  }

  // Underlying coordinates. WFG3 uses the quadratic position mapping
  // x_i = t_i*(t_i - 0.5) + 0.5 (note: the canonical toolkit instead scales
  // position coordinates 2..M-1 by the distance coordinate, collapsing them
  // to 0.5 on the optimal front; see the WFG3 cross-check test); all other
  // problems keep x = t.
  std::vector<double> x(m);
  if (p.family == ProblemFamily::wfg3) {
    for (int i = 0; i < m - 1; ++i) {
      x[i] = t[i] * (t[i] - 0.5) + 0.5;
    }
  } else {
    for (int i = 0; i < m - 1; ++i) {
      x[i] = t[i];
    }
  }
  x[m - 1] = t[m - 1];

  std::vector<double> position(x.begin(), x.end() - 1);
  std::vector<double> h;
  switch (p.family) {
    case ProblemFamily::wfg1:
      h = shape_convex(position);
      h[m - 1] = shape_mixed(position[0], 1.0, 5.0);
      break;
    case ProblemFamily::wfg2:
      h = shape_convex(position);
      h[m - 1] = shape_disc(position[0], 1.0, 1.0, 5.0);
      break;
    case ProblemFamily::wfg3:
      h = shape_linear(position);
      break;
    default:
      h = shape_concave(position);
      break;
  }

  std::vector<double> f(m);
  for (int i = 0; i < m; ++i) {
    f[i] = x[m - 1] + 2.0 * (i + 1) * h[i];
  }
  return f;
}

}  // namespace

const std::vector<ProblemFamily>& all_problem_families() {
  static const std::vector<ProblemFamily> families = {
      ProblemFamily::dtlz1, ProblemFamily::dtlz2, ProblemFamily::dtlz3,
      ProblemFamily::dtlz4, ProblemFamily::wfg1,  ProblemFamily::wfg2,
      ProblemFamily::wfg3,  ProblemFamily::wfg4,  ProblemFamily::wfg5,
      ProblemFamily::wfg6,  ProblemFamily::wfg7,  ProblemFamily::wfg8,
      ProblemFamily::wfg9};
  return families;
}

std::string family_name(ProblemFamily family) {
  switch (family) {
    case ProblemFamily::dtlz1: return "dtlz1";
    case ProblemFamily::dtlz2: return "dtlz2";
    case ProblemFamily::dtlz3: return "dtlz3";
    case ProblemFamily::dtlz4: return "dtlz4";
    case ProblemFamily::wfg1: return "wfg1";
    case ProblemFamily::wfg2: return "wfg2";
    case ProblemFamily::wfg3: return "wfg3";
    case ProblemFamily::wfg4: return "wfg4";
    case ProblemFamily::wfg5: return "wfg5";
    case ProblemFamily::wfg6: return "wfg6";
    case ProblemFamily::wfg7: return "wfg7";
    case ProblemFamily::wfg8: return "wfg8";
    case ProblemFamily::wfg9: return "wfg9";
  }
  throw std::logic_error("unknown problem family");
}

ProblemFamily parse_problem_family(const std::string& name) {
  for (ProblemFamily family : all_problem_families()) {
    if (family_name(family) == name) {
      return family;
    }
  }
  throw std::invalid_argument("unknown problem family '" + name + "'");
}

bool is_dtlz(ProblemFamily family) {
  switch (family) {
    case ProblemFamily::dtlz1:
    case ProblemFamily::dtlz2:
    case ProblemFamily::dtlz3:
    case ProblemFamily::dtlz4:
      return true;
    default:
      return false;
  }
}

bool is_wfg(ProblemFamily family) { return !is_dtlz(family); }

std::string ProblemInstance::id() const {
  return family_name(family) + "-m" + std::to_string(objectives);
}

ProblemInstance make_instance(ProblemFamily family, int objectives) {
  if (objectives < 2) {
    throw std::invalid_argument("problem instances require at least 2 objectives");
  }
  ProblemInstance p;
  p.family = family;
  p.objectives = objectives;
  if (is_dtlz(family)) {
    p.distance_params = family == ProblemFamily::dtlz1 ? 5 : 10;
    p.variables = objectives + p.distance_params - 1;
    p.bounds.lower.assign(p.variables, 0.0);
    p.bounds.upper.assign(p.variables, 1.0);
  } else {
    p.position_params = 2 * (objectives - 1);
    p.distance_params = 20;
    p.variables = p.position_params + p.distance_params;
    p.bounds.lower.assign(p.variables, 0.0);
    p.bounds.upper.resize(p.variables);
    for (int j = 0; j < p.variables; ++j) {
      p.bounds.upper[j] = 2.0 * (j + 1);
    }
  }
  return p;
}

ProblemInstance make_instance(const std::string& family, int objectives) {
  return make_instance(parse_problem_family(family), objectives);
}

std::vector<double> evaluate(const ProblemInstance& instance,
                             const std::vector<double>& decision) {
  if (static_cast<int>(decision.size()) != instance.variables) {
    throw std::invalid_argument("decision vector has " +
                                std::to_string(decision.size()) +
                                " variables, expected " +
                                std::to_string(instance.variables));
  }
  for (int j = 0; j < instance.variables; ++j) {
    if (decision[j] < instance.bounds.lower[j] ||
        decision[j] > instance.bounds.upper[j]) {
      throw std::invalid_argument("decision variable " + std::to_string(j + 1) +
                                  " is out of bounds");
    }
  }
  if ((instance.family == ProblemFamily::wfg2 ||
       instance.family == ProblemFamily::wfg3) &&
      (instance.variables - instance.position_params) % 2 != 0) {
    throw std::invalid_argument(
        "WFG2/WFG3 need an even number of distance parameters");
  }
  return is_dtlz(instance.family) ? evaluate_dtlz(instance, decision)
                                  : evaluate_wfg(instance, decision);
}

std::vector<double> pareto_point_from_weight(ProblemFamily family,
                                             const WeightVector& w) {
  if (!is_dtlz(family)) {
    throw std::invalid_argument(
        "analytic Pareto points are only available for DTLZ families");
  }
  const auto& c = w.components;
  double sum = 0.0, sum_sq = 0.0;
  for (double v : c) {
    sum += v;
    sum_sq += v * v;
  }
  if (sum_sq == 0.0) {
    throw std::invalid_argument("cannot intersect a zero weight vector");
  }
  std::vector<double> f(c.size());
  if (family == ProblemFamily::dtlz1) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      f[i] = 0.5 * c[i] / sum;
    }
  } else {
    // ray-sphere intersection: scale w to unit Euclidean length
    const double norm = std::sqrt(sum_sq);
    for (std::size_t i = 0; i < c.size(); ++i) {
      f[i] = c[i] / norm;
    }
  }
  return f;
}

}  // namespace manyopt
