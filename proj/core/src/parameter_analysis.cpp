#include "cascade/parameter_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cascade/errors.hpp"

namespace cascade {

bool antiphase_condition(const Threshold& t) {
  const double c2 = t.c2();
  const double excess = detail::logistic(c2) - t.c1();
  return c2 + excess <= t.c_hi();
}

double antiphase_root() {
  const auto quartic_gap = [](double c) {
    const double lhs = c * (19.0 + c * (-84.0 + c * (128.0 - 64.0 * c)));
    return lhs - 0.5 * (1.0 + std::sqrt(1.0 - c));
  };
  // c = 3/4 is a degenerate root of the same equation; stay clear of it.
  return bisect(quartic_gap, {0.76, kPeriodTwoLimit - 1e-9}, 1e-15);
}

double star_residual(int s, double c) {
  const Threshold t(c);
  double x = c;
  for (int i = 0; i < s; ++i) x = threshold_map(x, t).state;
  return x - kInteriorFixedPoint;
}

StarValue find_star(int s, Interval bracket) {
  if (s < 2) throw ParameterError("find_star: s must be >= 2");
  if (!(bracket.lo > 0.75 && bracket.hi < 1.0 && bracket.lo < bracket.hi)) {
    throw ParameterError("find_star: bracket must lie inside (3/4, 1)");
  }
  const double root = bisect([s](double c) { return star_residual(s, c); }, bracket, 1e-16);

  const Threshold t(root);
  double x = root;
  for (int i = 1; i < s; ++i) {
    x = threshold_map(x, t).state;
    if (!(x < 0.5)) {
      throw ParameterError("find_star: root " + std::to_string(root) + " has orbit point " +
                           std::to_string(i) + " at or above 1/2");
    }
  }
  if (std::abs(star_residual(s, root)) > 1e-8) {
    throw BracketError("find_star: bisection converged to a discontinuity, not a root");
  }
  return {s, root};
}

Interval star_bracket(int s, std::optional<double> previous) {
  if (s < 2) throw ParameterError("star_bracket: s must be >= 2");
  if (s == 2) return {0.905, 0.96};
  if (!previous) throw ParameterError("star_bracket: xi_{s-1} is required for s > 2");
  const double gap = 1.0 - *previous;
  return {1.0 - gap / 2.0, 1.0 - gap / 8.0};
}

std::vector<StarValue> star_values(int max_s) {
  std::vector<StarValue> out;
  std::optional<double> previous;
  for (int s = 2; s <= max_s; ++s) {
    out.push_back(find_star(s, star_bracket(s, previous)));
    previous = out.back().value;
  }
  return out;
}

namespace {

// Right inverse branch of the logistic map; decreasing, so end points swap.
Interval right_branch_preimage(const Interval& j) {
  const auto g = [](double y) { return 0.5 + 0.5 * std::sqrt(1.0 - y); };
  return {g(j.hi), g(j.lo)};
}

void require_above_star_two(const Threshold& t) {
  if (!(t.c1() > kStarTwo)) {
    throw ParameterError("Markov partition needs c1 > xi_2 = 0.933012702; got " +
                         std::to_string(t.c1()));
  }
}

struct Partition {
  Interval j0;
  Interval image;
  std::vector<Interval> preimages;
  int n0;
};

Partition build_partition(const Threshold& t, int count) {
  Partition p;
  p.j0 = {t.c2(), t.c0()};
  // J0 lies left of C where f is increasing and below c1, so f(J0) = (c3, c1).
  p.image = {detail::logistic(t.c2()), detail::logistic(t.c0())};
  p.image.hi = std::min(p.image.hi, t.c1());

  // Past this depth the preimages are within rounding of 3/4.
  const int depth = std::max(count, 64);
  int last_failure = 0;
  Interval j = p.j0;
  for (int i = 1; i <= depth; ++i) {
    j = right_branch_preimage(j);
    if (i <= count) p.preimages.push_back(j);
    if (!p.image.contains(j, kMarkovSlack)) last_failure = i;
  }
  p.n0 = last_failure + 1;
  return p;
}

}  // namespace

double MarkovModel::entropy_bound() const { return std::log(spectral_radius); }

int markov_base_index(const Threshold& t) {
  require_above_star_two(t);
  return build_partition(t, 0).n0;
}

MarkovModel build_markov(const Threshold& t, int n) {
  require_above_star_two(t);
  Partition p = build_partition(t, n);
  if (n < p.n0 + 1) {
    throw ParameterError("build_markov: n = " + std::to_string(n) + " must be >= n0 + 1 = " +
                         std::to_string(p.n0 + 1));
  }

  const int dim = n + 1;
  std::vector<int> m(static_cast<std::size_t>(dim * dim), 0);
  for (int r = 0; r + 1 < dim; ++r) m[static_cast<std::size_t>(r * dim + r + 1)] = 1;
  for (int r = p.n0; r <= n; ++r) m[static_cast<std::size_t>(r * dim)] = 1;

  MarkovModel model{t.c1(), p.j0, std::move(p.preimages), p.image, p.n0, std::move(m), dim, 0.0};
  model.spectral_radius = spectral_radius(model.matrix, dim);
  return model;
}

double spectral_radius(const std::vector<int>& matrix, int dimension, double tol, int max_iter) {
  const auto n = static_cast<std::size_t>(dimension);
  if (dimension < 1 || matrix.size() != n * n) {
    throw ParameterError("spectral_radius: matrix is not square");
  }
  std::vector<double> v(n, 1.0 / static_cast<double>(n));
  std::vector<double> w(n);
  for (int it = 0; it < max_iter; ++it) {
    double norm = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      double acc = 0.0;
      for (std::size_t c = 0; c < n; ++c) acc += matrix[r * n + c] * v[c];
      w[r] = acc;
      norm += acc;
    }
    if (norm == 0.0) return 0.0;
    // Collatz-Wielandt: min and max of (Mv)_i / v_i bracket the radius once v > 0.
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    bool positive = true;
    for (std::size_t r = 0; r < n; ++r) {
      if (v[r] <= 0.0) {
        positive = false;
        break;
      }
      lo = std::min(lo, w[r] / v[r]);
      hi = std::max(hi, w[r] / v[r]);
    }
    if (positive && hi - lo <= tol * hi) return 0.5 * (lo + hi);
    for (std::size_t r = 0; r < n; ++r) v[r] = w[r] / norm;
  }
  throw Error("spectral_radius: power iteration did not converge");
}

std::vector<BifurcationSample> bifurcation_scan(double c1_lo, double c1_hi, int steps,
                                                int max_iter) {
  if (!(c1_lo > 0.75 && c1_lo < c1_hi && c1_hi < 1.0)) {
    throw ParameterError("bifurcation_scan: need 3/4 < lo < hi < 1");
  }
  if (steps < 1) throw ParameterError("bifurcation_scan: steps must be >= 1");
  std::vector<BifurcationSample> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const double c1 = steps == 1 ? c1_lo : c1_lo + (c1_hi - c1_lo) * k / (steps - 1);
    OrbitClass cls = classify_orbit(Threshold(c1), max_iter);
    std::optional<int> period;
    if (const int p = period_of(cls); p > 0) period = p;
    out.push_back({c1, cls, period});
  }
  return out;
}

bool central_component_reaches_boundary(const Threshold& t, int sites) {
  if (sites < 2) throw ParameterError("central_component_reaches_boundary: N must be >= 2");
  for (int j = 1; j < sites; ++j) {
    if (j * (1.0 - t.c1()) > 1.0) return true;
  }
  return false;
}

}  // namespace cascade
