#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qcompile/random.hpp"

namespace qcompile {

/// Options shared by the derivative-free baselines. `max_iters` is the
/// objective-evaluation budget (for these methods one iteration = one
/// objective evaluation).
struct DfoOptions {
  std::int64_t max_iters = 10000;
  double initial_step = 0.5;  // simplex edge length / line-search bracket scale
  double tolerance = 1e-10;   // relative objective-spread convergence test
  bool restart_on_converge = false;  // restart from the best point until the budget is spent
  double restart_radius = 3.14159265358979323846;  // uniform jitter around the best point
};

struct DfoTraceRow {
  std::int64_t eval = 0;  // 1-based evaluation index
  double value = 0.0;     // objective at this evaluation
  double best = 0.0;      // best value seen so far
};

struct DfoResult {
  std::vector<double> best_x;
  double best_value = 0.0;
  std::vector<DfoTraceRow> trace;
  std::int64_t evals = 0;
  bool budget_exhausted = false;
  int converged_count = 0;  // inner convergences (restarts follow each one)
};

using Objective = std::function<double(const std::vector<double>&)>;

/// Maximizes `objective` with the standard reflection/expansion/contraction/
/// shrink simplex method (coefficients 1, 2, 0.5, 0.5), implemented by
/// negation. When the simplex converges before the budget is spent and
/// restarts are enabled, it restarts from the best point with a jitter drawn
/// from `rng`. Deterministic given (x0, rng seed, opts).
DfoResult nelder_mead(const Objective& objective, std::vector<double> x0, const DfoOptions& opts,
                      RandomStream& rng);

/// Maximizes `objective` with Powell's conjugate-direction method using
/// Brent line minimization along each direction, with the standard
/// direction-set update. Restart behavior as for nelder_mead.
DfoResult powell(const Objective& objective, std::vector<double> x0, const DfoOptions& opts,
                 RandomStream& rng);

}  // namespace qcompile
