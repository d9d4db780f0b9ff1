#pragma once

// One VoLTE frame of agent/environment interaction.

#include <cstdint>
#include <string_view>
#include <vector>

#include "volte/environment.hpp"
#include "volte/faults.hpp"
#include "volte/power_control.hpp"
#include "volte/qlearn.hpp"

namespace volte {

enum class Arm { kFpa, kQlearn };

std::string_view to_string(Arm arm);
Arm parse_arm(std::string_view name);

struct TtiRecord {
  int episode = 0;
  int t = 0;
  int state = 0;  // state the action was selected in
  int action = 0;
  int command = 0;
  int repetitions = 0;
  double tx_dbm = 0.0;
  double sinr_db = 0.0;
  int network_action = 0;
  std::uint8_t register_bits = 0;
  double reward = 0.0;

  bool operator==(const TtiRecord&) const = default;
};

enum class TerminalStatus { kTargetMet, kTimeout };

std::string_view to_string(TerminalStatus status);

struct EpisodeResult {
  int episode = 0;
  std::vector<TtiRecord> trace;
  TerminalStatus status = TerminalStatus::kTimeout;
  double final_sinr_db = 0.0;
};

/// Agent state carried across episodes.
struct Agent {
  QTable q = QTable::Zero();
  double epsilon = 1.0;
  LearningParams params;

  explicit Agent(const LearningParams& p) : q(QTable::Constant(p.q_init)), epsilon(p.epsilon), params(p) {}
};

/// Random streams consumed by one episode.
struct EpisodeStreams {
  RandomStream faults;
  RandomStream exploration;
};

struct EpisodeSetup {
  const FaultConfig* faults = nullptr;
  double initial_power_dbm = 13.0;
  double max_power_dbm = 33.0;
  std::optional<double> min_power_dbm;
  double fpa_power_dbm = 13.0;
  /// When set, the agent's choice is replaced by this action (used to
  /// disable the agent in tests).
  std::optional<int> forced_action;
};

/// Closed-loop episode: runs until the target is met or tau TTIs elapse,
/// updating `agent` in place.
EpisodeResult run_episode(EpisodeEnvironment& env, Agent& agent, const EpisodeSetup& setup, int episode,
                          EpisodeStreams streams);

/// Fixed-power episode: constant FPA power for all tau TTIs, no commands.
EpisodeResult run_fpa_episode(EpisodeEnvironment& env, const LearningParams& params, const EpisodeSetup& setup,
                              int episode, EpisodeStreams streams);

}  // namespace volte
