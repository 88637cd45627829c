#include "qcompile/trace.hpp"

#include <algorithm>
#include <cmath>

#include "qcompile/csv.hpp"

namespace qcompile {

void TrainingTrace::finalize_asymptotics() {
  iterations_run = static_cast<std::int64_t>(rows.size());
  if (rows.empty()) return;
  const std::size_t n = rows.size();
  const std::size_t window =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(0.05 * n)));
  const std::size_t start = n - window;

  double sum = 0.0;
  for (std::size_t i = start; i < n; ++i) sum += rows[i].reward_mean;
  j_inf = sum / static_cast<double>(window);

  double sq = 0.0;
  for (std::size_t i = start; i < n; ++i) {
    const double d = rows[i].reward_mean - j_inf;
    sq += d * d;
  }
  j_inf_std = window > 1 ? std::sqrt(sq / static_cast<double>(window - 1)) : 0.0;

  double best = rows[0].reward_mean;
  double best_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    best = std::max(best, rows[i].reward_mean);
    if (i >= start) best_sum += best;
  }
  j_inf_best = best_sum / static_cast<double>(window);
}

std::string trace_to_csv(const TrainingTrace& trace, bool real_timings) {
  CsvWriter csv({"iteration", "reward_mean", "reward_std", "sigma_t", "baseline", "grad_norm",
                 "degenerate", "wall_ms"});
  for (const TraceRow& row : trace.rows) {
    csv.add_field(row.iteration);
    csv.add_field(row.reward_mean);
    csv.add_field(row.reward_std);
    csv.add_field(row.sigma_t);
    csv.add_field(row.baseline);
    csv.add_field(row.grad_norm);
    csv.add_field(std::int64_t{row.degenerate ? 1 : 0});
    csv.add_field(real_timings ? row.wall_ms : 0.0);
    csv.end_row();
  }
  return csv.str();
}

}  // namespace qcompile
