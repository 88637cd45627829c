#include "qcompile/sweeps.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

#include "qcompile/csv.hpp"

namespace qcompile {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Runs tasks [0, count) on a small pool; results must be written by index so
// the output order (and content) is invariant to the worker count.
void parallel_tasks(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  const int n_threads = std::min<std::size_t>(workers, count);
  pool.reserve(n_threads);
  for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

}  // namespace

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QCOMPILE_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return 1;
}

std::uint64_t cell_master_seed(std::uint64_t base_seed, int n_qubits, int seed_index) {
  std::uint64_t h = mix_token(base_seed, hash_label("cell"));
  h = mix_token(h, static_cast<std::uint64_t>(n_qubits));
  h = mix_token(h, static_cast<std::uint64_t>(seed_index));
  return h;
}

std::string sweep_rows_to_csv(const std::vector<SweepRow>& rows, bool real_timings) {
  CsvWriter csv({"n_qubits", "depth", "method", "repetitions", "noise_p", "seed", "J_inf",
                 "J_inf_std", "iters_run", "evals_run", "wallclock_s"});
  for (const SweepRow& r : rows) {
    csv.add_field(r.n_qubits);
    csv.add_field(r.depth);
    csv.add_field(method_name(r.method));
    csv.add_field(r.repetitions);
    csv.add_field(r.noise_p);
    csv.add_field(r.seed);
    csv.add_field(r.failed ? kNaN : r.j_inf);
    csv.add_field(r.failed ? kNaN : r.j_inf_std);
    csv.add_field(r.iters_run);
    csv.add_field(r.evals_run);
    csv.add_field(real_timings ? r.wallclock_s : 0.0);
    csv.end_row();
  }
  return csv.str();
}

namespace {

struct CellSpec {
  int n_qubits;
  std::int64_t repetitions;
  Method method;
  double noise_p;
  int seed;
  bool noisy_arm = false;
};

SweepRow run_cell(const ExperimentConfig& base, const CellSpec& cell, bool m_is_n_squared) {
  SweepRow row;
  row.n_qubits = cell.n_qubits;
  row.method = cell.method;
  row.repetitions = cell.repetitions;
  row.noise_p = cell.noise_p;
  row.seed = cell.seed;

  ExperimentConfig cfg = base;
  cfg.n_qubits = cell.n_qubits;
  if (cell.n_qubits != base.n_qubits) {
    // explicit depth/connectivity only make sense for the base qubit count
    cfg.depth.reset();
    cfg.connectivity.reset();
  }
  if (m_is_n_squared && !base.m_train) cfg.m_train = cell.n_qubits * cell.n_qubits;
  cfg.method = cell.method;
  if (cell.repetitions > 0)
    cfg.shots = cell.repetitions;
  else
    cfg.shots.reset();
  cfg.noise_p = cell.noise_p;
  cfg.master_seed = cell_master_seed(base.master_seed, cell.n_qubits, cell.seed);
  row.depth = cfg.resolved_depth();

  try {
    const TrainingTrace trace = train(cfg);
    row.j_inf = cell.method == Method::pg ? trace.j_inf : trace.j_inf_best;
    row.j_inf_std = trace.j_inf_std;
    row.iters_run = trace.iterations_run;
    row.evals_run = trace.evals_run;
    row.wallclock_s = trace.wall_s_total;
    row.final_exact_fidelity = trace.final_exact_fidelity;
  } catch (const std::exception& e) {
    row.failed = true;
    row.error = e.what();
    row.j_inf = kNaN;
    row.j_inf_std = kNaN;
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_trainability_sweep(const SweepOptions& opts) {
  std::vector<CellSpec> cells;
  for (int n : opts.n_list)
    for (std::int64_t reps : opts.reps_list)
      for (Method method : opts.methods)
        for (int seed = 0; seed < opts.seeds; ++seed)
          cells.push_back({n, reps, method, opts.base.noise_p, seed});

  std::vector<SweepRow> rows(cells.size());
  parallel_tasks(cells.size(), resolve_workers(opts.workers), [&](std::size_t i) {
    rows[i] = run_cell(opts.base, cells[i], opts.m_is_n_squared);
  });
  return rows;
}

std::string variance_ratios_to_csv(const std::vector<VarianceRatioRow>& rows) {
  CsvWriter csv({"n_qubits", "repetitions", "sigma_noisy", "sigma_noiseless", "ratio",
                 "ratio_se"});
  for (const VarianceRatioRow& r : rows) {
    csv.add_field(r.n_qubits);
    csv.add_field(r.repetitions);
    csv.add_field(r.sigma_noisy);
    csv.add_field(r.sigma_noiseless);
    csv.add_field(r.ratio);
    csv.add_field(r.ratio_se);
    csv.end_row();
  }
  return csv.str();
}

NoiseSweepResult run_noise_sweep(const NoiseSweepOptions& opts) {
  for (std::int64_t reps : opts.reps_list)
    if (reps < 1) throw std::invalid_argument("noise sweep repetitions must be >= 1");

  std::vector<CellSpec> cells;
  for (int n : opts.n_list)
    for (std::int64_t reps : opts.reps_list)
      for (bool noisy_arm : {false, true})
        for (int seed = 0; seed < opts.seeds; ++seed)
          cells.push_back({n, reps, opts.base.method, noisy_arm ? opts.noise_p : 0.0, seed,
                           noisy_arm});

  NoiseSweepResult result;
  result.rows.resize(cells.size());
  parallel_tasks(cells.size(), resolve_workers(opts.workers), [&](std::size_t i) {
    result.rows[i] = run_cell(opts.base, cells[i], /*m_is_n_squared=*/true);
  });

  // Asymptotic-fluctuation ratios per (n, repetitions): sigma is the mean
  // over seeds of the within-trace reward std over the final-5% window; the
  // SE of the ratio comes from a leave-one-seed-out jackknife.
  for (int n : opts.n_list) {
    for (std::int64_t reps : opts.reps_list) {
      std::vector<double> noisy, clean;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].n_qubits != n || cells[i].repetitions != reps || result.rows[i].failed)
          continue;
        (cells[i].noisy_arm ? noisy : clean).push_back(result.rows[i].j_inf_std);
      }
      if (noisy.empty() || clean.empty()) continue;
      VarianceRatioRow row;
      row.n_qubits = n;
      row.repetitions = reps;
      row.sigma_noisy = mean_of(noisy);
      row.sigma_noiseless = mean_of(clean);
      row.ratio = row.sigma_noisy / row.sigma_noiseless;
      if (noisy.size() == clean.size() && noisy.size() > 1) {
        const std::size_t s = noisy.size();
        std::vector<double> jack(s);
        for (std::size_t k = 0; k < s; ++k) {
          double num = 0.0, den = 0.0;
          for (std::size_t i = 0; i < s; ++i) {
            if (i == k) continue;
            num += noisy[i];
            den += clean[i];
          }
          jack[k] = num / den;
        }
        const double jbar = mean_of(jack);
        double sq = 0.0;
        for (double v : jack) sq += (v - jbar) * (v - jbar);
        row.ratio_se = std::sqrt(sq * static_cast<double>(s - 1) / static_cast<double>(s));
      }
      result.ratios.push_back(row);
    }
  }
  return result;
}

std::string generalization_rows_to_csv(const std::vector<GeneralizationRow>& rows) {
  CsvWriter csv({"n_qubits", "depth", "seed", "train_size", "set", "fidelity", "fidelity_se",
                 "j_inf_train"});
  for (const GeneralizationRow& r : rows) {
    csv.add_field(r.n_qubits);
    csv.add_field(r.depth);
    csv.add_field(r.seed);
    csv.add_field(r.train_size);
    csv.add_field(r.set);
    csv.add_field(r.failed ? kNaN : r.fidelity);
    csv.add_field(r.failed ? kNaN : r.fidelity_se);
    csv.add_field(r.failed ? kNaN : r.j_inf_train);
    csv.end_row();
  }
  return csv.str();
}

std::vector<GeneralizationRow> run_generalization(const GeneralizationOptions& opts) {
  for (std::size_t i = 1; i < opts.train_sizes.size(); ++i)
    if (opts.train_sizes[i] <= opts.train_sizes[i - 1])
      throw std::invalid_argument("train sizes must be ascending");
  if (opts.t_test < 1) throw std::invalid_argument("t_test must be >= 1");

  struct Task {
    int seed;
    int size;
  };
  std::vector<Task> tasks;
  for (int seed = 0; seed < opts.seeds; ++seed)
    for (int size : opts.train_sizes) tasks.push_back({seed, size});

  const int n = opts.base.n_qubits;
  std::vector<std::vector<GeneralizationRow>> results(tasks.size());

  parallel_tasks(tasks.size(), resolve_workers(opts.workers), [&](std::size_t i) {
    const Task& task = tasks[i];
    ExperimentConfig cfg = opts.base;
    cfg.method = Method::pg;
    cfg.m_train = task.size;
    cfg.master_seed = cell_master_seed(opts.base.master_seed, n, task.seed);
    const int depth = cfg.resolved_depth();

    auto make_row = [&](const std::string& set) {
      GeneralizationRow row;
      row.n_qubits = n;
      row.depth = depth;
      row.seed = task.seed;
      row.train_size = task.size;
      row.set = set;
      return row;
    };

    std::vector<GeneralizationRow>& out = results[i];
    try {
      const TrainingTrace trace = train_pg(cfg);
      TrainingInstance inst = make_instance(cfg);
      const Circuit v_dagger = adjoint(build_ansatz(inst.spec, trace.theta_star));

      // Test families are fixed per seed (derived from the cell master, not
      // the train size), so size comparisons are paired.
      RandomStream master(cfg.master_seed);
      RandomStream zero_rng = master.derive("test-zero");
      RandomStream xz_rng = master.derive("test-xz");
      RandomStream global_rng = master.derive("test-global");

      auto evaluate_set = [&](const InitialStateSet& set, const std::string& name) {
        FidelityEvaluator eval(inst.target.circuit, set, EvalMode::exact_mode(), NoiseModel{});
        RandomStream rng(0);
        const FidelityEstimate est = eval.evaluate(v_dagger, rng);
        GeneralizationRow row = make_row(name);
        row.fidelity = est.value;
        double sq = 0.0;
        for (double r : est.per_state) sq += (r - est.value) * (r - est.value);
        const std::size_t k = est.per_state.size();
        row.fidelity_se =
            k > 1 ? std::sqrt(sq / static_cast<double>(k - 1) / static_cast<double>(k)) : 0.0;
        row.j_inf_train = trace.j_inf;
        return row;
      };

      out.push_back(evaluate_set(inst.train_states, "training"));
      out.push_back(evaluate_set(
          generate_test_states(n, StateSetKind::test_zero, 1, zero_rng), "test_zero"));
      out.push_back(evaluate_set(
          generate_test_states(n, StateSetKind::test_local_xz, opts.t_test, xz_rng),
          "test_local_xz"));
      out.push_back(evaluate_set(
          generate_test_states(n, StateSetKind::test_global_random, opts.t_test, global_rng),
          "test_global_random"));
    } catch (const std::exception& e) {
      GeneralizationRow row = make_row("error");
      row.failed = true;
      row.error = e.what();
      out.assign(1, row);
    }
  });

  std::vector<GeneralizationRow> rows;
  for (const auto& group : results) rows.insert(rows.end(), group.begin(), group.end());
  return rows;
}

}  // namespace qcompile
