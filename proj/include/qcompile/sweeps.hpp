#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcompile/config.hpp"
#include "qcompile/train.hpp"

namespace qcompile {

/// Deterministic per-cell master seed: same (base seed, n, seed index) gives
/// the same problem instance regardless of which methods, repetition rates
/// or noise strengths are swept, so comparisons across those axes are paired.
std::uint64_t cell_master_seed(std::uint64_t base_seed, int n_qubits, int seed_index);

struct SweepRow {
  int n_qubits = 0;
  int depth = 0;
  Method method = Method::pg;
  std::int64_t repetitions = 0;  // 0 = exact mode
  double noise_p = 0.0;
  int seed = 0;
  double j_inf = 0.0;      // best-so-far J_inf for DFO rows, raw for PG
  double j_inf_std = 0.0;  // std over the final-5% window of the raw trace
  std::int64_t iters_run = 0;
  std::int64_t evals_run = 0;
  double wallclock_s = 0.0;
  double final_exact_fidelity = -1.0;  // diagnostic, not part of the CSV schema
  bool failed = false;
  std::string error;
};

/// Pinned schema: n_qubits,depth,method,repetitions,noise_p,seed,J_inf,
/// J_inf_std,iters_run,evals_run,wallclock_s. Failed cells appear with
/// J_inf = nan; details go to the manifest.
std::string sweep_rows_to_csv(const std::vector<SweepRow>& rows, bool real_timings = false);

struct SweepOptions {
  ExperimentConfig base;
  std::vector<int> n_list;
  std::vector<std::int64_t> reps_list{0};  // 0 = exact
  std::vector<Method> methods{Method::pg};
  int seeds = 10;
  int workers = 0;  // 0 = QCOMPILE_WORKERS env or 1
  bool m_is_n_squared = true;  // trainability preset: m = n^2
};

std::vector<SweepRow> run_trainability_sweep(const SweepOptions& opts);

struct VarianceRatioRow {
  int n_qubits = 0;
  std::int64_t repetitions = 0;
  double sigma_noisy = 0.0;      // mean over seeds of the asymptotic reward std
  double sigma_noiseless = 0.0;
  double ratio = 0.0;
  double ratio_se = 0.0;  // jackknife-over-seeds standard error
};

std::string variance_ratios_to_csv(const std::vector<VarianceRatioRow>& rows);

struct NoiseSweepOptions {
  ExperimentConfig base;
  std::vector<int> n_list;
  std::vector<std::int64_t> reps_list;  // shots; must be >= 1
  double noise_p = 0.01;
  int seeds = 10;
  int workers = 0;
};

struct NoiseSweepResult {
  std::vector<SweepRow> rows;              // noiseless and noisy cells
  std::vector<VarianceRatioRow> ratios;    // per (n, repetitions)
};

NoiseSweepResult run_noise_sweep(const NoiseSweepOptions& opts);

struct GeneralizationRow {
  int n_qubits = 0;
  int depth = 0;
  int seed = 0;
  int train_size = 0;
  std::string set;     // training / test_zero / test_local_xz / test_global_random
  double fidelity = 0.0;
  double fidelity_se = 0.0;  // per-state std / sqrt(set size)
  double j_inf_train = 0.0;
  bool failed = false;
  std::string error;
};

std::string generalization_rows_to_csv(const std::vector<GeneralizationRow>& rows);

struct GeneralizationOptions {
  ExperimentConfig base;
  std::vector<int> train_sizes;  // ascending
  int t_test = 500;
  int seeds = 10;
  int workers = 0;
};

std::vector<GeneralizationRow> run_generalization(const GeneralizationOptions& opts);

/// Worker count: explicit value, else QCOMPILE_WORKERS, else 1.
int resolve_workers(int requested);

}  // namespace qcompile
