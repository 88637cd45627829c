#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qcompile/dfo.hpp"
#include "dfo_internal.hpp"

namespace qcompile {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

// One simplex descent (minimization) until convergence or budget exhaustion.
void simplex_run(detail::BudgetedObjective& f, const std::vector<double>& start, double step,
                 double tol) {
  const std::size_t d = start.size();
  std::vector<std::vector<double>> xs(d + 1, start);
  std::vector<double> fs(d + 1);
  for (std::size_t j = 0; j < d; ++j) xs[j + 1][j] += step;
  for (std::size_t i = 0; i <= d; ++i) fs[i] = f(xs[i]);

  std::vector<std::size_t> order(d + 1);
  std::vector<double> centroid(d), xr(d), xe(d), xc(d);
  while (true) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
    const std::size_t best = order[0], worst = order[d];
    const std::size_t second_worst = d >= 1 ? order[d - 1] : order[0];

    if (2.0 * std::fabs(fs[worst] - fs[best]) <=
        tol * (std::fabs(fs[worst]) + std::fabs(fs[best])) + 1e-300)
      return;

    for (std::size_t j = 0; j < d; ++j) {
      double c = 0.0;
      for (std::size_t i = 0; i <= d; ++i)
        if (i != worst) c += xs[i][j];
      centroid[j] = c / static_cast<double>(d);
    }

    for (std::size_t j = 0; j < d; ++j) xr[j] = centroid[j] + kReflect * (centroid[j] - xs[worst][j]);
    const double fr = f(xr);

    if (fr < fs[best]) {
      for (std::size_t j = 0; j < d; ++j) xe[j] = centroid[j] + kExpand * (centroid[j] - xs[worst][j]);
      const double fe = f(xe);
      if (fe < fr) {
        xs[worst] = xe;
        fs[worst] = fe;
      } else {
        xs[worst] = xr;
        fs[worst] = fr;
      }
      continue;
    }
    if (fr < fs[second_worst]) {
      xs[worst] = xr;
      fs[worst] = fr;
      continue;
    }

    bool shrink = false;
    if (fr < fs[worst]) {
      // outside contraction
      for (std::size_t j = 0; j < d; ++j) xc[j] = centroid[j] + kContract * (xr[j] - centroid[j]);
      const double fc = f(xc);
      if (fc <= fr) {
        xs[worst] = xc;
        fs[worst] = fc;
      } else {
        shrink = true;
      }
    } else {
      // inside contraction
      for (std::size_t j = 0; j < d; ++j)
        xc[j] = centroid[j] + kContract * (xs[worst][j] - centroid[j]);
      const double fc = f(xc);
      if (fc < fs[worst]) {
        xs[worst] = xc;
        fs[worst] = fc;
      } else {
        shrink = true;
      }
    }
    if (shrink) {
      for (std::size_t i = 0; i <= d; ++i) {
        if (i == best) continue;
        for (std::size_t j = 0; j < d; ++j)
          xs[i][j] = xs[best][j] + kShrink * (xs[i][j] - xs[best][j]);
        fs[i] = f(xs[i]);
      }
    }
  }
}

}  // namespace

DfoResult nelder_mead(const Objective& objective, std::vector<double> x0, const DfoOptions& opts,
                      RandomStream& rng) {
  if (x0.empty()) throw std::invalid_argument("x0 must be non-empty");
  if (opts.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  detail::BudgetedObjective f(objective, opts.max_iters);
  DfoResult result;
  std::vector<double> start = x0;
  try {
    while (true) {
      simplex_run(f, start, opts.initial_step, opts.tolerance);
      ++result.converged_count;
      if (!opts.restart_on_converge) break;
      start = f.best_x();
      for (double& v : start) v += rng.uniform(-opts.restart_radius, opts.restart_radius);
    }
  } catch (const detail::BudgetExhausted&) {
    result.budget_exhausted = true;
  }
  f.finish(result);
  return result;
}

}  // namespace qcompile
