#pragma once

// Experiment configuration: an INI-style file with [radio], [learning],
// [faults], [metrics] and [run] sections. Omitted keys take their defaults;
// unknown sections or keys are rejected.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "volte/environment.hpp"
#include "volte/episode.hpp"
#include "volte/faults.hpp"
#include "volte/metrics.hpp"
#include "volte/qlearn.hpp"

namespace volte {

enum class TraceVerbosity { kFinal, kAll };

struct RunConfig {
  std::uint64_t seed = 1;
  std::vector<Arm> arms{Arm::kFpa, Arm::kQlearn};
  std::filesystem::path out_dir = "out";
  TraceVerbosity trace = TraceVerbosity::kFinal;
  /// Seeds seed, seed+1, ... used for the aggregate block.
  int replicas = 20;
};

struct ExperimentConfig {
  RadioConfig radio;
  LearningParams learning;
  FaultConfig faults;
  MetricsConfig metrics;
  RunConfig run;
  /// Hex SHA-256 of the raw config bytes.
  std::string sha256;

  void validate() const;
};

/// Parses config text. Throws ConfigError with the offending field path.
ExperimentConfig parse_config(const std::string& text);

/// Reads and parses a file; the hash is taken over the exact file bytes.
ExperimentConfig load_config(const std::filesystem::path& path);

std::string sha256_hex(const std::string& bytes);

/// Parses a probability literal: a decimal number or a fraction "a/b".
double parse_probability(const std::string& text, const std::string& field);

}  // namespace volte
