#pragma once

#include <cstdint>
#include <stdexcept>
#include <optional>
#include <string>
#include <vector>

#include "qcompile/circuit.hpp"
#include "qcompile/dfo.hpp"

namespace qcompile {

struct ConfigNotFoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Method { pg, nelder_mead, powell };

std::string method_name(Method method);
Method method_from_name(const std::string& name);

/// Depth preset: {5:2, 10:3, 15:4, 20:5}; other qubit counts round log2(n).
int default_depth(int n_qubits);

/// Default training-set size max(15 n, n^2).
int default_m_train(int n_qubits);

/// One training run's configuration. Unset optionals resolve to the default
/// presets; `resolved()` returns a copy with everything filled in (that copy
/// is what run manifests echo).
struct ExperimentConfig {
  int n_qubits = 5;
  std::optional<int> depth;
  std::optional<std::vector<QubitPair>> connectivity;  // default: linear chain
  std::optional<int> m_train;
  int n_rollouts = 20;
  std::optional<int> iterations;        // default: 2000 PG, 10000 NM, 50000 Powell
  std::optional<std::int64_t> shots;    // unset = exact mode
  bool faults_per_shot = false;
  double noise_p = 0.0;
  double sigma_initial = 1e-2;
  double sigma_final = 1e-5;
  double gamma = 0.9;
  double eta = 3e-3;
  double epsilon_reg = 1e-8;
  std::uint64_t master_seed = 1;
  Method method = Method::pg;
  bool learn_sigma = false;
  bool sample_one_state = false;
  bool init_at_target = false;  // diagnostic: start mu at the hidden angles
  double dfo_initial_step = 0.5;
  double dfo_tolerance = 1e-10;
  bool dfo_restarts = false;
  std::string output_dir = "out";

  int resolved_depth() const;
  int resolved_m() const;
  int resolved_iterations() const;
  DfoOptions dfo_options() const;
  ExperimentConfig resolved() const;

  void validate() const;  // throws std::invalid_argument with the field name

  std::string to_json_string() const;
  static ExperimentConfig from_json_string(const std::string& text);
  static ExperimentConfig from_json_file(const std::string& path);
};

}  // namespace qcompile
