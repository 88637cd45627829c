#include "qcompile/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qcompile {

std::string method_name(Method method) {
  switch (method) {
    case Method::pg: return "pg";
    case Method::nelder_mead: return "nelder_mead";
    case Method::powell: return "powell";
  }
  throw std::logic_error("unreachable method");
}

Method method_from_name(const std::string& name) {
  if (name == "pg") return Method::pg;
  if (name == "nelder_mead") return Method::nelder_mead;
  if (name == "powell") return Method::powell;
  throw std::invalid_argument("unknown method: " + name);
}

int default_depth(int n_qubits) {
  switch (n_qubits) {
    case 5: return 2;
    case 10: return 3;
    case 15: return 4;
    case 20: return 5;
    default: break;
  }
  const int d = static_cast<int>(std::lround(std::log2(static_cast<double>(n_qubits))));
  return d < 1 ? 1 : d;
}

int default_m_train(int n_qubits) {
  const int by_linear = 15 * n_qubits;
  const int by_square = n_qubits * n_qubits;
  return by_linear > by_square ? by_linear : by_square;
}

int ExperimentConfig::resolved_depth() const { return depth.value_or(default_depth(n_qubits)); }

int ExperimentConfig::resolved_m() const { return m_train.value_or(default_m_train(n_qubits)); }

int ExperimentConfig::resolved_iterations() const {
  if (iterations) return *iterations;
  switch (method) {
    case Method::pg: return 2000;
    case Method::nelder_mead: return 10000;
    case Method::powell: return 50000;
  }
  throw std::logic_error("unreachable method");
}

DfoOptions ExperimentConfig::dfo_options() const {
  DfoOptions opts;
  opts.max_iters = resolved_iterations();
  opts.initial_step = dfo_initial_step;
  opts.tolerance = dfo_tolerance;
  opts.restart_on_converge = dfo_restarts;
  return opts;
}

ExperimentConfig ExperimentConfig::resolved() const {
  ExperimentConfig out = *this;
  out.depth = resolved_depth();
  out.m_train = resolved_m();
  out.iterations = resolved_iterations();
  if (!out.connectivity) out.connectivity = chain_connectivity(n_qubits);
  return out;
}

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument("config field " + what); };
  if (n_qubits < 1 || n_qubits > 24) fail("n_qubits must be in [1, 24]");
  if (resolved_depth() < 1) fail("depth must be >= 1");
  if (resolved_m() < 1) fail("m_train must be >= 1");
  if (n_rollouts < 2) fail("n_rollouts must be >= 2");
  if (resolved_iterations() < 1) fail("iterations must be >= 1");
  if (shots && *shots < 1) fail("shots must be >= 1");
  if (!(noise_p >= 0.0 && noise_p <= 1.0)) fail("noise_p must be in [0, 1]");
  if (!(sigma_final > 0.0)) fail("sigma_final must be positive");
  if (sigma_initial < sigma_final) fail("sigma_initial must be >= sigma_final");
  if (!(gamma > 0.0 && gamma < 1.0)) fail("gamma must be in (0, 1)");
  if (!(eta > 0.0)) fail("eta must be positive");
  if (!(epsilon_reg > 0.0)) fail("epsilon_reg must be positive");
  if (!(dfo_initial_step > 0.0)) fail("dfo_initial_step must be positive");
  if (!(dfo_tolerance >= 0.0)) fail("dfo_tolerance must be >= 0");
  if (connectivity) Circuit(n_qubits, *connectivity);  // validates pair set
}

namespace {

using nlohmann::json;

json config_to_json(const ExperimentConfig& c) {
  json j;
  j["n_qubits"] = c.n_qubits;
  if (c.depth) j["depth"] = *c.depth;
  if (c.connectivity) {
    auto& conn = j["connectivity"] = json::array();
    for (const auto& [a, b] : *c.connectivity) conn.push_back({a, b});
  }
  if (c.m_train) j["m_train"] = *c.m_train;
  j["n_rollouts"] = c.n_rollouts;
  if (c.iterations) j["iterations"] = *c.iterations;
  if (c.shots) j["shots"] = *c.shots;
  j["faults_per_shot"] = c.faults_per_shot;
  j["noise_p"] = c.noise_p;
  j["sigma_initial"] = c.sigma_initial;
  j["sigma_final"] = c.sigma_final;
  j["gamma"] = c.gamma;
  j["eta"] = c.eta;
  j["epsilon_reg"] = c.epsilon_reg;
  j["master_seed"] = c.master_seed;
  j["method"] = method_name(c.method);
  j["learn_sigma"] = c.learn_sigma;
  j["sample_one_state"] = c.sample_one_state;
  j["init_at_target"] = c.init_at_target;
  j["dfo_initial_step"] = c.dfo_initial_step;
  j["dfo_tolerance"] = c.dfo_tolerance;
  j["dfo_restarts"] = c.dfo_restarts;
  j["output_dir"] = c.output_dir;
  return j;
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig c;
  try {
    if (j.contains("n_qubits")) c.n_qubits = j.at("n_qubits").get<int>();
    if (j.contains("depth") && !j.at("depth").is_null()) c.depth = j.at("depth").get<int>();
    if (j.contains("connectivity") && !j.at("connectivity").is_null()) {
      std::vector<QubitPair> pairs;
      for (const auto& p : j.at("connectivity"))
        pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
      c.connectivity = std::move(pairs);
    }
    if (j.contains("m_train") && !j.at("m_train").is_null()) c.m_train = j.at("m_train").get<int>();
    if (j.contains("n_rollouts")) c.n_rollouts = j.at("n_rollouts").get<int>();
    if (j.contains("iterations") && !j.at("iterations").is_null())
      c.iterations = j.at("iterations").get<int>();
    if (j.contains("shots") && !j.at("shots").is_null())
      c.shots = j.at("shots").get<std::int64_t>();
    if (j.contains("faults_per_shot")) c.faults_per_shot = j.at("faults_per_shot").get<bool>();
    if (j.contains("noise_p")) c.noise_p = j.at("noise_p").get<double>();
    if (j.contains("sigma_initial")) c.sigma_initial = j.at("sigma_initial").get<double>();
    if (j.contains("sigma_final")) c.sigma_final = j.at("sigma_final").get<double>();
    if (j.contains("gamma")) c.gamma = j.at("gamma").get<double>();
    if (j.contains("eta")) c.eta = j.at("eta").get<double>();
    if (j.contains("epsilon_reg")) c.epsilon_reg = j.at("epsilon_reg").get<double>();
    if (j.contains("master_seed")) c.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("method")) c.method = method_from_name(j.at("method").get<std::string>());
    if (j.contains("learn_sigma")) c.learn_sigma = j.at("learn_sigma").get<bool>();
    if (j.contains("sample_one_state")) c.sample_one_state = j.at("sample_one_state").get<bool>();
    if (j.contains("init_at_target")) c.init_at_target = j.at("init_at_target").get<bool>();
    if (j.contains("dfo_initial_step")) c.dfo_initial_step = j.at("dfo_initial_step").get<double>();
    if (j.contains("dfo_tolerance")) c.dfo_tolerance = j.at("dfo_tolerance").get<double>();
    if (j.contains("dfo_restarts")) c.dfo_restarts = j.at("dfo_restarts").get<bool>();
    if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config schema error: ") + e.what());
  }
  return c;
}

}  // namespace

std::string ExperimentConfig::to_json_string() const { return config_to_json(*this).dump(2); }

ExperimentConfig ExperimentConfig::from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config schema error: ") + e.what());
  }
  return config_from_json(j);
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigNotFoundError("config not found: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_string(buf.str());
}

}  // namespace qcompile
