// Command-line front end.
//
// Subcommands:
//   train        one PG or derivative-free training run -> trace.csv + manifest.json
//   compare      PG vs Nelder-Mead vs Powell on one instance at an equal
//                raw-evaluation budget -> compare.csv
//   sweep        trainability sweep over qubit counts / repetition rates /
//                methods / seeds -> sweep.csv
//   noise-sweep  paired noiseless vs depolarizing-noise runs over a
//                repetition grid -> sweep.csv + ratios.csv
//   generalize   train on growing training sets, evaluate on held-out test
//                families -> generalization.csv
//   hoeffding    sample-size calculator: prints the m needed for (eps, delta)
//                and the bound for a given (eps, m)
//
// Every run reads an optional JSON config plus flag overrides and writes a
// JSON manifest (config echo, seed lineage, version, timings) next to the
// CSV outputs. CSV outputs are byte-identical across re-runs of the same
// manifest; wall-clock columns are zeroed unless --csv-timings is given.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcompile/config.hpp"
#include "qcompile/hoeffding.hpp"
#include "qcompile/manifest.hpp"
#include "qcompile/sweeps.hpp"
#include "qcompile/train.hpp"
#include "qcompile/version.hpp"

namespace fs = std::filesystem;
using namespace qcompile;

namespace {

struct CliError {
  std::string error_class;
  std::string message;
  int exit_code;
};

[[noreturn]] void fail(const std::string& error_class, const std::string& message, int code) {
  throw CliError{error_class, message, code};
}

struct CommonArgs {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> n_qubits;
  std::optional<int> depth;
  std::optional<int> m_train;
  std::optional<int> iterations;
  std::optional<std::int64_t> shots;
  std::optional<double> noise_p;
  std::optional<std::string> method;
  std::optional<std::string> out_dir;
  bool csv_timings = false;
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "JSON config file");
  cmd->add_option("--seed", args.seed, "master seed override");
  cmd->add_option("--n-qubits", args.n_qubits, "qubit count override");
  cmd->add_option("--depth", args.depth, "ansatz depth override");
  cmd->add_option("--m-train", args.m_train, "training-set size override");
  cmd->add_option("--iterations", args.iterations, "iteration/evaluation budget override");
  cmd->add_option("--shots", args.shots, "measurement repetitions (omit for exact mode)");
  cmd->add_option("--noise-p", args.noise_p, "depolarizing strength per qubit per gate");
  cmd->add_option("--method", args.method, "pg | nelder_mead | powell");
  cmd->add_option("--out", args.out_dir, "output directory");
  cmd->add_flag("--csv-timings", args.csv_timings, "write real wall-clock columns in CSVs");
}

ExperimentConfig load_config(const CommonArgs& args) {
  ExperimentConfig cfg;
  if (!args.config_path.empty()) {
    try {
      cfg = ExperimentConfig::from_json_file(args.config_path);
    } catch (const ConfigNotFoundError& e) {
      fail("config_not_found", e.what(), 2);
    } catch (const std::invalid_argument& e) {
      fail("config_invalid", e.what(), 2);
    }
  }
  if (args.seed) cfg.master_seed = *args.seed;
  if (args.n_qubits) cfg.n_qubits = *args.n_qubits;
  if (args.depth) cfg.depth = *args.depth;
  if (args.m_train) cfg.m_train = *args.m_train;
  if (args.iterations) cfg.iterations = *args.iterations;
  if (args.shots) cfg.shots = *args.shots;
  if (args.noise_p) cfg.noise_p = *args.noise_p;
  if (args.method) cfg.method = method_from_name(*args.method);
  if (args.out_dir) cfg.output_dir = *args.out_dir;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    fail("config_invalid", e.what(), 2);
  }
  const int desk_cap = cfg.shots ? 10 : 12;
  if (cfg.n_qubits > desk_cap)
    std::cerr << "note: n_qubits=" << cfg.n_qubits
              << " is beyond the desk-scale preset cap (" << desk_cap
              << "); expect long runtimes\n";
  return cfg;
}

fs::path prepare_output_dir(const ExperimentConfig& cfg) {
  fs::path dir(cfg.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail("io_error", "cannot create output directory: " + dir.string(), 3);
  return dir;
}

void write_text(const fs::path& path, const std::string& text) {
  FILE* f = std::fopen(path.string().c_str(), "wb");
  if (!f) fail("io_error", "output path unwritable: " + path.string(), 3);
  const std::size_t written = std::fwrite(text.data(), 1, text.size(), f);
  std::fclose(f);
  if (written != text.size()) fail("io_error", "short write: " + path.string(), 3);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  for (char c : text + ",") {
    if (c == ',') {
      if (!token.empty()) out.push_back(std::stoi(token));
      token.clear();
    } else {
      token += c;
    }
  }
  return out;
}

std::vector<std::int64_t> parse_int64_list(const std::string& text) {
  std::vector<std::int64_t> out;
  for (int v : parse_int_list(text)) out.push_back(v);
  return out;
}

std::vector<Method> parse_methods(const std::string& text) {
  std::vector<Method> out;
  std::string token;
  for (char c : text + ",") {
    if (c == ',') {
      if (!token.empty()) out.push_back(method_from_name(token));
      token.clear();
    } else {
      token += c;
    }
  }
  return out;
}

double now_seconds() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

int cmd_train(const CommonArgs& args) {
  const ExperimentConfig cfg = load_config(args);
  const fs::path dir = prepare_output_dir(cfg);
  const double t0 = now_seconds();
  const TrainingTrace trace = train(cfg);

  RunManifest manifest("train", cfg);
  manifest.add_value("j_inf", trace.j_inf);
  manifest.add_value("j_inf_std", trace.j_inf_std);
  manifest.add_value("j_inf_best", trace.j_inf_best);
  manifest.add_value("final_exact_fidelity", trace.final_exact_fidelity);
  manifest.add_value("evals_run", static_cast<double>(trace.evals_run));
  manifest.add_value("iterations_run", static_cast<double>(trace.iterations_run));
  manifest.add_timing("train_s", trace.wall_s_total);
  manifest.add_timing("total_s", now_seconds() - t0);

  TrainingInstance inst = make_instance(cfg);
  manifest.add_value("train_set_mean_pairwise_overlap", mean_pairwise_overlap(inst.train_states));
  manifest.add_vector("theta_star", trace.theta_star);
  std::vector<double> wrapped = trace.theta_star;
  for (double& v : wrapped) {
    v = std::fmod(v, 2.0 * M_PI);
    if (v < 0.0) v += 2.0 * M_PI;
  }
  manifest.add_vector("theta_star_wrapped", wrapped);

  write_text(dir / "trace.csv", trace_to_csv(trace, args.csv_timings));
  manifest.add_output((dir / "trace.csv").string());
  manifest.add_output((dir / "manifest.json").string());
  manifest.write_file((dir / "manifest.json").string());

  std::printf("method=%s n=%d depth=%d iterations=%lld evals=%lld\n",
              method_name(cfg.method).c_str(), cfg.n_qubits, cfg.resolved_depth(),
              static_cast<long long>(trace.iterations_run),
              static_cast<long long>(trace.evals_run));
  std::printf("J_inf=%.6f J_inf_std=%.6f exact_fidelity(theta*)=%.6f\n", trace.j_inf,
              trace.j_inf_std, trace.final_exact_fidelity);
  return 0;
}

int cmd_compare(const CommonArgs& args, std::int64_t budget) {
  ExperimentConfig cfg = load_config(args);
  const fs::path dir = prepare_output_dir(cfg);
  const double t0 = now_seconds();

  std::vector<SweepRow> rows;
  for (Method method : {Method::pg, Method::nelder_mead, Method::powell}) {
    ExperimentConfig run_cfg = cfg;
    run_cfg.method = method;
    if (budget > 0) {
      run_cfg.iterations = static_cast<int>(
          method == Method::pg ? (budget + cfg.n_rollouts - 1) / cfg.n_rollouts : budget);
    }
    const TrainingTrace trace = train(run_cfg);
    SweepRow row;
    row.n_qubits = run_cfg.n_qubits;
    row.depth = run_cfg.resolved_depth();
    row.method = method;
    row.repetitions = run_cfg.shots.value_or(0);
    row.noise_p = run_cfg.noise_p;
    row.seed = static_cast<int>(run_cfg.master_seed);
    row.j_inf = method == Method::pg ? trace.j_inf : trace.j_inf_best;
    row.j_inf_std = trace.j_inf_std;
    row.iters_run = trace.iterations_run;
    row.evals_run = trace.evals_run;
    row.wallclock_s = trace.wall_s_total;
    rows.push_back(row);
    std::printf("%-12s J_inf=%.6f evals=%lld\n", method_name(method).c_str(), row.j_inf,
                static_cast<long long>(row.evals_run));
  }

  RunManifest manifest("compare", cfg);
  manifest.add_timing("total_s", now_seconds() - t0);
  write_text(dir / "compare.csv", sweep_rows_to_csv(rows, args.csv_timings));
  manifest.add_output((dir / "compare.csv").string());
  manifest.add_output((dir / "manifest.json").string());
  manifest.write_file((dir / "manifest.json").string());
  return 0;
}

int cmd_sweep(const CommonArgs& args, const std::string& n_list, const std::string& reps_list,
              const std::string& methods, int seeds, int workers) {
  SweepOptions opts;
  opts.base = load_config(args);
  opts.n_list = parse_int_list(n_list);
  opts.reps_list = parse_int64_list(reps_list);
  opts.methods = parse_methods(methods);
  opts.seeds = seeds;
  opts.workers = workers;
  if (opts.reps_list.empty()) opts.reps_list = {0};

  const fs::path dir = prepare_output_dir(opts.base);
  const double t0 = now_seconds();
  const std::vector<SweepRow> rows = run_trainability_sweep(opts);

  RunManifest manifest("sweep", opts.base);
  for (const SweepRow& row : rows)
    if (row.failed)
      manifest.add_error("cell n=" + std::to_string(row.n_qubits) +
                             " seed=" + std::to_string(row.seed),
                         row.error);
  manifest.add_timing("total_s", now_seconds() - t0);
  write_text(dir / "sweep.csv", sweep_rows_to_csv(rows, args.csv_timings));
  manifest.add_output((dir / "sweep.csv").string());
  manifest.add_output((dir / "manifest.json").string());
  manifest.write_file((dir / "manifest.json").string());
  std::printf("sweep: %zu rows -> %s\n", rows.size(), (dir / "sweep.csv").string().c_str());
  return 0;
}

int cmd_noise_sweep(const CommonArgs& args, const std::string& n_list,
                    const std::string& reps_list, double noise_p, int seeds, int workers) {
  NoiseSweepOptions opts;
  opts.base = load_config(args);
  opts.n_list = parse_int_list(n_list);
  opts.reps_list = parse_int64_list(reps_list);
  opts.noise_p = noise_p;
  opts.seeds = seeds;
  opts.workers = workers;

  const fs::path dir = prepare_output_dir(opts.base);
  const double t0 = now_seconds();
  const NoiseSweepResult result = run_noise_sweep(opts);

  RunManifest manifest("noise-sweep", opts.base);
  for (const SweepRow& row : result.rows)
    if (row.failed)
      manifest.add_error("cell n=" + std::to_string(row.n_qubits) +
                             " seed=" + std::to_string(row.seed),
                         row.error);
  manifest.add_timing("total_s", now_seconds() - t0);
  write_text(dir / "sweep.csv", sweep_rows_to_csv(result.rows, args.csv_timings));
  write_text(dir / "ratios.csv", variance_ratios_to_csv(result.ratios));
  manifest.add_output((dir / "sweep.csv").string());
  manifest.add_output((dir / "ratios.csv").string());
  manifest.add_output((dir / "manifest.json").string());
  manifest.write_file((dir / "manifest.json").string());
  std::printf("noise-sweep: %zu rows, %zu ratio rows -> %s\n", result.rows.size(),
              result.ratios.size(), dir.string().c_str());
  return 0;
}

int cmd_generalize(const CommonArgs& args, const std::string& sizes, int t_test, int seeds,
                   int workers) {
  GeneralizationOptions opts;
  opts.base = load_config(args);
  opts.train_sizes = parse_int_list(sizes);
  if (opts.train_sizes.empty()) {
    const int m = opts.base.n_qubits * opts.base.n_qubits;
    opts.train_sizes = {m, 2 * m, 4 * m};
  }
  opts.t_test = t_test;
  opts.seeds = seeds;
  opts.workers = workers;

  const fs::path dir = prepare_output_dir(opts.base);
  const double t0 = now_seconds();
  const std::vector<GeneralizationRow> rows = run_generalization(opts);

  RunManifest manifest("generalize", opts.base);
  for (const GeneralizationRow& row : rows)
    if (row.failed)
      manifest.add_error("cell size=" + std::to_string(row.train_size) +
                             " seed=" + std::to_string(row.seed),
                         row.error);
  manifest.add_timing("total_s", now_seconds() - t0);
  write_text(dir / "generalization.csv", generalization_rows_to_csv(rows));
  manifest.add_output((dir / "generalization.csv").string());
  manifest.add_output((dir / "manifest.json").string());
  manifest.write_file((dir / "manifest.json").string());
  std::printf("generalize: %zu rows -> %s\n", rows.size(),
              (dir / "generalization.csv").string().c_str());
  return 0;
}

int cmd_hoeffding(double epsilon, std::optional<double> delta, std::optional<int> m) {
  try {
    if (delta) {
      const int required = hoeffding_required_m(epsilon, *delta);
      std::printf("m=%d\n", required);
      std::printf("bound(eps=%g, m=%d)=%.6g\n", epsilon, required,
                  hoeffding_bound(epsilon, required));
    }
    if (m) std::printf("bound(eps=%g, m=%d)=%.6g\n", epsilon, *m, hoeffding_bound(epsilon, *m));
    if (!delta && !m) fail("invalid_argument", "hoeffding needs --delta and/or --m", 2);
  } catch (const std::invalid_argument& e) {
    fail("invalid_argument", e.what(), 2);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational compilation of shallow circuits by Gaussian-policy gradient "
               "training, with derivative-free baselines"};
  app.set_version_flag("--version", std::string("qcompile ") + kVersion);
  app.require_subcommand(1);

  CommonArgs train_args, compare_args, sweep_args, noise_args, gen_args;

  auto* train_cmd = app.add_subcommand("train", "single training run");
  add_common_options(train_cmd, train_args);

  auto* compare_cmd =
      app.add_subcommand("compare", "PG vs DFO baselines at an equal raw-evaluation budget");
  add_common_options(compare_cmd, compare_args);
  std::int64_t budget = 0;
  compare_cmd->add_option("--budget", budget,
                          "raw objective-evaluation budget shared by all methods");

  auto* sweep_cmd = app.add_subcommand("sweep", "trainability sweep");
  add_common_options(sweep_cmd, sweep_args);
  std::string sweep_n = "5,10", sweep_reps = "0", sweep_methods = "pg,nelder_mead,powell";
  int sweep_seeds = 10, sweep_workers = 0;
  sweep_cmd->add_option("--n", sweep_n, "comma-separated qubit counts");
  sweep_cmd->add_option("--reps", sweep_reps, "comma-separated repetition rates (0 = exact)");
  sweep_cmd->add_option("--methods", sweep_methods, "comma-separated methods");
  sweep_cmd->add_option("--seeds", sweep_seeds, "seeds per cell");
  sweep_cmd->add_option("--workers", sweep_workers, "concurrent cells (0 = QCOMPILE_WORKERS)");

  auto* noise_cmd = app.add_subcommand("noise-sweep", "paired noiseless/noisy sweep");
  add_common_options(noise_cmd, noise_args);
  std::string noise_n = "5", noise_reps = "5000,10000,50000,100000";
  double noise_strength = 0.01;
  int noise_seeds = 10, noise_workers = 0;
  noise_cmd->add_option("--n", noise_n, "comma-separated qubit counts");
  noise_cmd->add_option("--reps", noise_reps, "comma-separated repetition rates");
  noise_cmd->add_option("--noise-strength", noise_strength, "depolarizing strength for the noisy arm");
  noise_cmd->add_option("--seeds", noise_seeds, "seeds per cell");
  noise_cmd->add_option("--workers", noise_workers, "concurrent cells (0 = QCOMPILE_WORKERS)");

  auto* gen_cmd = app.add_subcommand("generalize", "generalization study over training-set sizes");
  add_common_options(gen_cmd, gen_args);
  std::string gen_sizes;  // default: n^2, 2n^2, 4n^2
  int gen_t = 500, gen_seeds = 10, gen_workers = 0;
  gen_cmd->add_option("--sizes", gen_sizes,
                      "comma-separated ascending training-set sizes (default n^2,2n^2,4n^2)");
  gen_cmd->add_option("--t-test", gen_t, "test-set size");
  gen_cmd->add_option("--seeds", gen_seeds, "seeds");
  gen_cmd->add_option("--workers", gen_workers, "concurrent cells (0 = QCOMPILE_WORKERS)");

  auto* hoeff_cmd = app.add_subcommand("hoeffding", "sample-size calculator");
  double hoeff_eps = 0.1;
  std::optional<double> hoeff_delta;
  std::optional<int> hoeff_m;
  hoeff_cmd->add_option("--epsilon", hoeff_eps, "accuracy")->required();
  hoeff_cmd->add_option("--delta", hoeff_delta, "failure probability");
  hoeff_cmd->add_option("--m", hoeff_m, "sample count to evaluate the bound at");

  CLI11_PARSE(app, argc, argv);

  try {
    if (train_cmd->parsed()) return cmd_train(train_args);
    if (compare_cmd->parsed()) return cmd_compare(compare_args, budget);
    if (sweep_cmd->parsed())
      return cmd_sweep(sweep_args, sweep_n, sweep_reps, sweep_methods, sweep_seeds, sweep_workers);
    if (noise_cmd->parsed())
      return cmd_noise_sweep(noise_args, noise_n, noise_reps, noise_strength, noise_seeds,
                             noise_workers);
    if (gen_cmd->parsed()) return cmd_generalize(gen_args, gen_sizes, gen_t, gen_seeds, gen_workers);
    if (hoeff_cmd->parsed()) return cmd_hoeffding(hoeff_eps, hoeff_delta, hoeff_m);
  } catch (const CliError& e) {
    std::cerr << "error: {\"class\":\"" << e.error_class << "\",\"message\":\"" << e.message
              << "\"}\n";
    return e.exit_code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: {\"class\":\"invalid_argument\",\"message\":\"" << e.what() << "\"}\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: {\"class\":\"internal_error\",\"message\":\"" << e.what() << "\"}\n";
    return 1;
  }
  return 0;
}
