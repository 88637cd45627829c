#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcompile/config.hpp"

namespace qcompile {

/// Run manifest: config echo with defaults resolved, seed lineage, version,
/// output files and (non-deterministic) timing data. Written next to the CSV
/// outputs; the CSVs stay byte-stable, everything run-specific-but-noisy
/// lives here.
class RunManifest {
 public:
  RunManifest(std::string command, const ExperimentConfig& config);

  void add_output(const std::string& path);
  void add_timing(const std::string& key, double seconds);
  void add_note(const std::string& key, const std::string& value);
  void add_value(const std::string& key, double value);
  void add_vector(const std::string& key, const std::vector<double>& values);
  void add_error(const std::string& context, const std::string& message);

  std::string to_json_string() const;
  void write_file(const std::string& path) const;

 private:
  std::string command_;
  std::string config_json_;
  std::uint64_t master_seed_;
  std::vector<std::string> outputs_;
  std::vector<std::pair<std::string, double>> timings_;
  std::vector<std::pair<std::string, std::string>> notes_;
  std::vector<std::pair<std::string, double>> values_;
  std::vector<std::pair<std::string, std::vector<double>>> vectors_;
  std::vector<std::pair<std::string, std::string>> errors_;
};

}  // namespace qcompile
