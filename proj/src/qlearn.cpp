#include "volte/qlearn.hpp"

#include <cmath>
#include <string>

#include "volte/error.hpp"

namespace volte {

EpsilonSchedule parse_epsilon_schedule(std::string_view name) {
  if (name == "per_tti") return EpsilonSchedule::kPerTti;
  if (name == "per_episode") return EpsilonSchedule::kPerEpisode;
  throw ConfigError("expected per_tti or per_episode, got '" + std::string(name) + "'", "learning.epsilon_schedule");
}

std::string_view to_string(EpsilonSchedule schedule) {
  return schedule == EpsilonSchedule::kPerEpisode ? "per_episode" : "per_tti";
}

void LearningParams::validate() const {
  auto require = [](bool ok, const char* field, const char* what) {
    if (!ok) throw ConfigError(what, field);
  };
  require(learning_rate > 0.0 && learning_rate < 1.0, "learning.learning_rate", "must lie in (0,1)");
  require(discount > 0.0 && discount < 1.0, "learning.discount", "must lie in (0,1)");
  require(epsilon > 0.0 && epsilon <= 1.0, "learning.epsilon", "must lie in (0,1]");
  require(epsilon_decay > 0.0 && epsilon_decay <= 1.0, "learning.epsilon_decay", "must lie in (0,1]");
  require(epsilon_min > 0.0 && epsilon_min <= epsilon, "learning.epsilon_min", "must lie in (0, epsilon]");
  require(ttis_per_episode >= 1, "learning.ttis_per_episode", "must be at least 1");
  require(episodes >= 1, "learning.episodes", "must be at least 1");
  require(reward_min < -1.0, "learning.reward_min", "must be below -1");
  require(reward_max > 1.0, "learning.reward_max", "must be above 1");
  require(std::isfinite(target_sinr_db), "learning.target_sinr_db", "must be finite");
  require(std::isfinite(initial_sinr_db), "learning.initial_sinr_db", "must be finite");
  require(std::isfinite(q_init), "learning.q_init", "must be finite");
}

PcAction select_action(const QTable& q, PcState s, double epsilon, RandomStream& rng) {
  const double r = rng.uniform();
  if (r <= epsilon) return PcAction{static_cast<int>(rng.uniform_index(PcAction::kCount))};
  return PcAction{greedy_action(q, s.id)};
}

double reward(double sinr_now_db, double sinr_prev_db, double target_db, int t, int tau, double reward_min,
              double reward_max) {
  if (sinr_now_db >= target_db) return reward_max;
  if (t >= tau) return reward_min;
  const double delta = sinr_now_db - sinr_prev_db;
  if (std::abs(delta) <= kSinrEqualityTolDb) return 0.0;
  return delta > 0.0 ? 1.0 : -1.0;
}

}  // namespace volte
