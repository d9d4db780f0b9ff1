#include "volte/episode.hpp"

#include <string>

#include "volte/error.hpp"

namespace volte {

std::string_view to_string(Arm arm) { return arm == Arm::kFpa ? "fpa" : "qlearn"; }

Arm parse_arm(std::string_view name) {
  if (name == "fpa") return Arm::kFpa;
  if (name == "qlearn") return Arm::kQlearn;
  throw ConfigError("unknown arm '" + std::string(name) + "' (expected fpa or qlearn)", "run.arms");
}

std::string_view to_string(TerminalStatus status) {
  return status == TerminalStatus::kTargetMet ? "target_met" : "timeout";
}

namespace {

FaultRegister step_faults(const FaultRegister& reg, const FaultConfig& cfg, RandomStream& rng,
                          NetworkAction& drawn) {
  drawn = sample_action(reg, cfg.distribution, rng);
  // Always consume the VSWR draw so the fault stream advances uniformly.
  const double v = draw_vswr(cfg, rng);
  return apply_action(drawn, reg, cfg, v);
}

}  // namespace

EpisodeResult run_episode(EpisodeEnvironment& env, Agent& agent, const EpisodeSetup& setup, int episode,
                          EpisodeStreams streams) {
  const LearningParams& p = agent.params;
  if (!p.persist_q) agent.q.setConstant(p.q_init);
  if (p.schedule == EpsilonSchedule::kPerEpisode) {
    agent.epsilon = decay_epsilon(agent.epsilon, p.epsilon_decay, p.epsilon_min);
  }

  EpisodeResult result;
  result.episode = episode;
  result.trace.reserve(static_cast<std::size_t>(p.ttis_per_episode));

  PowerSetting power{setup.initial_power_dbm, setup.max_power_dbm, setup.min_power_dbm};
  FaultRegister reg = FaultRegister::cleared(setup.faults->vswr_nominal);
  PcState s{0};
  double sinr_prev = p.initial_sinr_db;
  double sinr_now = p.initial_sinr_db;
  int t = 0;

  do {
    ++t;
    if (p.schedule == EpsilonSchedule::kPerTti) {
      agent.epsilon = decay_epsilon(agent.epsilon, p.epsilon_decay, p.epsilon_min);
    }
    env.advance_tti();

    NetworkAction nu{};
    reg = step_faults(reg, *setup.faults, streams.faults, nu);

    PcAction a = select_action(agent.q, s, agent.epsilon, streams.exploration);
    if (setup.forced_action) a = PcAction{*setup.forced_action};
    const PcStep step = apply_pc_action(a, power);
    power = step.power;

    sinr_now = env.effective_sinr_db(power.tx_dbm, reg);
    const double r = reward(sinr_now, sinr_prev, p.target_sinr_db, t, p.ttis_per_episode, p.reward_min,
                            p.reward_max);
    q_update(agent.q, s.id, a.id, r, step.state.id, p.learning_rate, p.discount);

    result.trace.push_back(TtiRecord{episode, t, s.id, a.id, static_cast<int>(a.command()), a.repetitions(),
                                     power.tx_dbm, sinr_now, to_int(nu), reg.bits(), r});
    s = step.state;
    sinr_prev = sinr_now;
  } while (!(sinr_now >= p.target_sinr_db || t >= p.ttis_per_episode));

  result.final_sinr_db = sinr_now;
  result.status = sinr_now >= p.target_sinr_db ? TerminalStatus::kTargetMet : TerminalStatus::kTimeout;
  return result;
}

EpisodeResult run_fpa_episode(EpisodeEnvironment& env, const LearningParams& p, const EpisodeSetup& setup,
                              int episode, EpisodeStreams streams) {
  EpisodeResult result;
  result.episode = episode;
  result.trace.reserve(static_cast<std::size_t>(p.ttis_per_episode));

  FaultRegister reg = FaultRegister::cleared(setup.faults->vswr_nominal);
  double sinr_prev = p.initial_sinr_db;
  double sinr_now = p.initial_sinr_db;

  for (int t = 1; t <= p.ttis_per_episode; ++t) {
    env.advance_tti();
    NetworkAction nu{};
    reg = step_faults(reg, *setup.faults, streams.faults, nu);
    sinr_now = env.effective_sinr_db(setup.fpa_power_dbm, reg);
    const double r = reward(sinr_now, sinr_prev, p.target_sinr_db, t, p.ttis_per_episode, p.reward_min,
                            p.reward_max);
    result.trace.push_back(TtiRecord{episode, t, 0, 0, 0, 0, setup.fpa_power_dbm, sinr_now, to_int(nu),
                                     reg.bits(), r});
    sinr_prev = sinr_now;
  }

  result.final_sinr_db = sinr_now;
  result.status = sinr_now >= p.target_sinr_db ? TerminalStatus::kTargetMet : TerminalStatus::kTimeout;
  return result;
}

}  // namespace volte
