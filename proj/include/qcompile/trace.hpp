#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcompile {

/// One training-iteration record. For the derivative-free methods a row is
/// one objective evaluation (baseline column carries the best-so-far value,
/// sigma/gradient columns are zero).
struct TraceRow {
  int iteration = 0;        // 1-based
  double reward_mean = 0.0;
  double reward_std = 0.0;
  double sigma_t = 0.0;
  double baseline = 0.0;
  double grad_norm = 0.0;
  double wall_ms = 0.0;
  bool degenerate = false;  // all rollout rewards identical this iteration
};

struct TrainingTrace {
  std::vector<TraceRow> rows;
  std::vector<double> theta_star;  // final mu (PG) / best point (DFO)
  double j_inf = 0.0;              // mean reward over the final 5% of rows
  double j_inf_std = 0.0;          // sample std over that window
  double j_inf_best = 0.0;         // same window over the best-so-far curve
  std::int64_t iterations_run = 0;
  std::int64_t evals_run = 0;      // raw objective evaluations
  double final_exact_fidelity = -1.0;  // noiseless exact F at theta_star
  bool budget_exhausted = false;
  double wall_s_total = 0.0;

  /// Fills j_inf / j_inf_std / j_inf_best from `rows`.
  void finalize_asymptotics();
};

/// Columns: iteration,reward_mean,reward_std,sigma_t,baseline,grad_norm,
/// degenerate,wall_ms. With `real_timings` false (the default) wall_ms is
/// written as 0 so re-runs of the same manifest are byte-identical; real
/// timings live in the run manifest.
std::string trace_to_csv(const TrainingTrace& trace, bool real_timings = false);

}  // namespace qcompile
