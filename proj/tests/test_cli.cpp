#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct CommandResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CommandResult run_cli(const std::string& args) {
  const fs::path tmp = fs::temp_directory_path() / "qcompile_cli_test";
  fs::create_directories(tmp);
  const fs::path out = tmp / "stdout.txt";
  const fs::path err = tmp / "stderr.txt";
  const std::string cmd = std::string(QCOMPILE_CLI_PATH) + " " + args + " >" + out.string() +
                          " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  CommandResult result;
  result.exit_code = WEXITSTATUS(status);
  result.out = slurp(out);
  result.err = slurp(err);
  return result;
}

}  // namespace

TEST_CASE("hoeffding subcommand prints the closed-form m") {
  const CommandResult r = run_cli("hoeffding --epsilon 0.1 --delta 1e-4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("m=496") != std::string::npos);

  const CommandResult b = run_cli("hoeffding --epsilon 0.1 --m 500");
  CHECK(b.exit_code == 0);
  CHECK(b.out.find("9.079") != std::string::npos);  // 2 e^{-10}
}

TEST_CASE("hoeffding rejects out-of-range inputs") {
  const CommandResult r = run_cli("hoeffding --epsilon 0.1 --delta 2.0");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("invalid_argument") != std::string::npos);
}

TEST_CASE("missing config file yields a machine-readable error") {
  const CommandResult r = run_cli("train --config /nonexistent/missing.json");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("config_not_found") != std::string::npos);
  CHECK(r.err.find("config not found") != std::string::npos);
}

TEST_CASE("invalid config value is rejected with its field name") {
  const fs::path tmp = fs::temp_directory_path() / "qcompile_cli_test";
  fs::create_directories(tmp);
  const fs::path cfg = tmp / "bad.json";
  std::ofstream(cfg) << "{\"n_qubits\": 0}";
  const CommandResult r = run_cli("train --config " + cfg.string());
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("config_invalid") != std::string::npos);
  CHECK(r.err.find("n_qubits") != std::string::npos);
}

TEST_CASE("train runs are byte-identical across reruns") {
  const fs::path tmp = fs::temp_directory_path() / "qcompile_cli_train";
  fs::remove_all(tmp);
  const std::string base =
      "train --n-qubits 2 --depth 1 --m-train 4 --iterations 30 --seed 11 --out ";
  const CommandResult r1 = run_cli(base + (tmp / "a").string());
  CHECK(r1.exit_code == 0);
  CHECK(r1.out.find("J_inf=") != std::string::npos);
  const CommandResult r2 = run_cli(base + (tmp / "b").string());
  CHECK(r2.exit_code == 0);

  const std::string trace_a = slurp(tmp / "a" / "trace.csv");
  const std::string trace_b = slurp(tmp / "b" / "trace.csv");
  CHECK(!trace_a.empty());
  CHECK(trace_a == trace_b);
  CHECK(fs::exists(tmp / "a" / "manifest.json"));
  const std::string manifest = slurp(tmp / "a" / "manifest.json");
  CHECK(manifest.find("\"master_seed\": 11") != std::string::npos);
  CHECK(manifest.find("seed_lineage") != std::string::npos);
}

TEST_CASE("compare emits one row per method") {
  const fs::path tmp = fs::temp_directory_path() / "qcompile_cli_compare";
  fs::remove_all(tmp);
  const CommandResult r = run_cli(
      "compare --n-qubits 2 --depth 1 --m-train 4 --budget 400 --seed 3 --out " + tmp.string());
  CHECK(r.exit_code == 0);
  const std::string csv = slurp(tmp / "compare.csv");
  CHECK(csv.find("pg") != std::string::npos);
  CHECK(csv.find("nelder_mead") != std::string::npos);
  CHECK(csv.find("powell") != std::string::npos);
}

TEST_CASE("sweep subcommand writes the pinned schema and is rerun-stable") {
  const fs::path tmp = fs::temp_directory_path() / "qcompile_cli_sweep";
  fs::remove_all(tmp);
  const std::string args =
      "sweep --n 2 --reps 0 --methods pg --seeds 2 --iterations 20 --m-train 4 --out ";
  CHECK(run_cli(args + (tmp / "a").string()).exit_code == 0);
  CHECK(run_cli(args + (tmp / "b").string()).exit_code == 0);
  const std::string a = slurp(tmp / "a" / "sweep.csv");
  CHECK(a.rfind("n_qubits,depth,method,repetitions,noise_p,seed,J_inf,", 0) == 0);
  CHECK(a == slurp(tmp / "b" / "sweep.csv"));
}

TEST_CASE("noise-sweep writes ratio table") {
  const fs::path tmp = fs::temp_directory_path() / "qcompile_cli_noise";
  fs::remove_all(tmp);
  const CommandResult r = run_cli(
      "noise-sweep --n 2 --reps 100 --noise-strength 0.02 --seeds 2 --iterations 15 "
      "--m-train 4 --out " +
      tmp.string());
  CHECK(r.exit_code == 0);
  const std::string ratios = slurp(tmp / "ratios.csv");
  CHECK(ratios.rfind("n_qubits,repetitions,sigma_noisy,sigma_noiseless,ratio", 0) == 0);
}

TEST_CASE("generalize writes per-set rows") {
  const fs::path tmp = fs::temp_directory_path() / "qcompile_cli_gen";
  fs::remove_all(tmp);
  const CommandResult r = run_cli(
      "generalize --n-qubits 2 --depth 1 --sizes 3,5 --t-test 10 --seeds 1 --iterations 15 "
      "--out " +
      tmp.string());
  CHECK(r.exit_code == 0);
  const std::string csv = slurp(tmp / "generalization.csv");
  CHECK(csv.find("test_local_xz") != std::string::npos);
  CHECK(csv.find("test_global_random") != std::string::npos);
  CHECK(csv.find("test_zero") != std::string::npos);
  CHECK(csv.find("training") != std::string::npos);
}

TEST_CASE("version flag") {
  const CommandResult r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("qcompile") != std::string::npos);
}
