#pragma once

// Experiment harness: runs the FPA and Q-learning arms over all episodes,
// evaluates the final episode and writes traces, metrics and figure data.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "volte/config.hpp"
#include "volte/episode.hpp"
#include "volte/metrics.hpp"

namespace volte {

struct ArmRun {
  Arm arm = Arm::kFpa;
  std::uint64_t seed = 0;
  /// Final episode (z = episodes) always; every episode under trace=all.
  std::vector<EpisodeResult> kept;
  EpisodeResult final_episode;
  std::vector<TerminalStatus> statuses;
  QTable q = QTable::Zero();
  double final_epsilon = 0.0;
  long total_ttis = 0;
  VoiceQuality quality;
};

/// Executes every episode for one arm. Streams are derived from
/// (seed, arm, episode) only, so arms never perturb each other.
ArmRun run_arm(const ExperimentConfig& config, Arm arm, std::uint64_t seed);

/// Fraction of the last `window` episodes that ended on the target.
double target_hit_rate(const ArmRun& run, int window);

struct RunSummary {
  Arm arm = Arm::kFpa;
  double retainability = 0.0;
  double mos = 0.0;
  std::filesystem::path trace_path;
  long total_ttis = 0;
  double wall_clock_s = 0.0;
  std::string config_sha256;
  std::uint64_t seed = 0;
};

struct ArmAggregate {
  Arm arm = Arm::kFpa;
  std::vector<std::uint64_t> seeds;
  std::vector<double> retainability;
  std::vector<double> mos;
  double mean_retainability = 0.0;
  double mean_mos = 0.0;
};

struct ExperimentResult {
  std::vector<ArmRun> runs;
  std::vector<RunSummary> summaries;
  std::vector<ArmAggregate> aggregates;
};

/// Single seeded run of one arm.
RunSummary run_experiment(const ExperimentConfig& config, Arm arm, ArmRun* run_out = nullptr);

/// Mean final-episode metrics over `replicas` consecutive seeds.
ArmAggregate run_replicas(const ExperimentConfig& config, Arm arm, std::uint64_t first_seed, int replicas);

/// Runs all configured arms plus the multi-seed aggregate.
ExperimentResult run_all(const ExperimentConfig& config);

inline const char* kTraceHeader = "episode,t,s,a,c,eta,p_tx_dbm,sinr_eff_db,nu,register,reward";
inline const char* kPcSequenceHeader = "arm,t,a,c,eta,command_db";
inline const char* kSinrTimelineHeader = "arm,t,sinr_eff_db,target_db,min_db";
inline const char* kMosHeader = "arm,retainability,mean_per,mos";

/// Writes trace_<arm>.csv, metrics.json, fig_pc_sequence.csv,
/// fig_sinr_timeline.csv and fig_mos.csv. Files are written to a temporary
/// name and renamed into place. Returns the paths written.
std::vector<std::filesystem::path> write_outputs(const ExperimentConfig& config, ExperimentResult& result,
                                                 const std::filesystem::path& out_dir);

}  // namespace volte
