#include "qcompile/manifest.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "qcompile/version.hpp"

namespace qcompile {

RunManifest::RunManifest(std::string command, const ExperimentConfig& config)
    : command_(std::move(command)),
      config_json_(config.resolved().to_json_string()),
      master_seed_(config.master_seed) {
  // Fixed choices surfaced for every run.
  notes_.emplace_back("target_angle_distribution", "uniform[0,2pi)");
  notes_.emplace_back("seed_lineage",
                      "streams derive from master_seed by label: target, train-states, init, "
                      "rollout/<index> (then per-state by member label), dfo-eval/<index>, "
                      "dfo-restart; sweep cells use cell_master_seed(base, n, seed)");
}

void RunManifest::add_output(const std::string& path) { outputs_.push_back(path); }

void RunManifest::add_timing(const std::string& key, double seconds) {
  timings_.emplace_back(key, seconds);
}

void RunManifest::add_note(const std::string& key, const std::string& value) {
  notes_.emplace_back(key, value);
}

void RunManifest::add_value(const std::string& key, double value) {
  values_.emplace_back(key, value);
}

void RunManifest::add_vector(const std::string& key, const std::vector<double>& values) {
  vectors_.emplace_back(key, values);
}

void RunManifest::add_error(const std::string& context, const std::string& message) {
  errors_.emplace_back(context, message);
}

std::string RunManifest::to_json_string() const {
  nlohmann::json j;
  j["tool"] = "qcompile";
  j["version"] = std::string(kVersion) + "+" + kGitRevision;
  j["command"] = command_;
  j["config"] = nlohmann::json::parse(config_json_);
  j["master_seed"] = master_seed_;
  j["outputs"] = outputs_;
  auto& notes = j["notes"] = nlohmann::json::object();
  for (const auto& [k, v] : notes_) notes[k] = v;
  auto& values = j["values"] = nlohmann::json::object();
  for (const auto& [k, v] : values_) values[k] = v;
  for (const auto& [k, v] : vectors_) values[k] = v;
  auto& timings = j["timings"] = nlohmann::json::object();
  for (const auto& [k, v] : timings_) timings[k] = v;
  if (!errors_.empty()) {
    auto& errors = j["errors"] = nlohmann::json::array();
    for (const auto& [ctx, msg] : errors_) errors.push_back({{"context", ctx}, {"message", msg}});
  }
  return j.dump(2) + "\n";
}

void RunManifest::write_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file: " + path);
  out << to_json_string();
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace qcompile
