#pragma once

// Tabular Q-learning: value table, epsilon-greedy selection, Bellman update
// and the reward shaping used by the power-control agent.

#include <Eigen/Core>

#include <string_view>

#include "volte/power_control.hpp"
#include "volte/rng.hpp"

namespace volte {

template <typename Scalar>
using QTableT = Eigen::Matrix<Scalar, PcState::kCount, PcAction::kCount, Eigen::RowMajor>;
using QTable = QTableT<double>;

enum class EpsilonSchedule { kPerTti, kPerEpisode };

EpsilonSchedule parse_epsilon_schedule(std::string_view name);
std::string_view to_string(EpsilonSchedule schedule);

struct LearningParams {
  double learning_rate = 0.001;
  double discount = 0.95;
  double epsilon = 1.0;
  double epsilon_decay = 0.99;
  double epsilon_min = 0.01;
  int ttis_per_episode = 20;
  int episodes = 707;
  double reward_min = -20.0;
  double reward_max = 20.0;
  double target_sinr_db = 6.0;
  double initial_sinr_db = 4.0;
  EpsilonSchedule schedule = EpsilonSchedule::kPerTti;
  double q_init = 0.0;
  /// Keep the table across episodes; false resets it every episode.
  bool persist_q = true;

  void validate() const;
};

/// Q(s,a) <- (1 - alpha) Q(s,a) + alpha (r + gamma max_a' Q(s',a')).
template <typename Derived>
void q_update(Eigen::MatrixBase<Derived>& q, int s, int a, typename Derived::Scalar r, int s_next,
              typename Derived::Scalar alpha, typename Derived::Scalar gamma) {
  using Scalar = typename Derived::Scalar;
  const Scalar best_next = q.row(s_next).maxCoeff();
  q(s, a) = (Scalar(1) - alpha) * q(s, a) + alpha * (r + gamma * best_next);
}

/// argmax over the row; ties go to the lowest action id.
template <typename Derived>
int greedy_action(const Eigen::MatrixBase<Derived>& q, int s) {
  int best = 0;
  for (int a = 1; a < q.cols(); ++a) {
    if (q(s, a) > q(s, best)) best = a;
  }
  return best;
}

/// Explores (uniform action) when a Uniform(0,1) draw is <= epsilon,
/// exploits otherwise.
PcAction select_action(const QTable& q, PcState s, double epsilon, RandomStream& rng);

constexpr double decay_epsilon(double epsilon, double decay, double epsilon_min) {
  const double next = epsilon * decay;
  return next > epsilon_min ? next : epsilon_min;
}

/// Equality tolerance (dB) when comparing consecutive effective SINRs.
inline constexpr double kSinrEqualityTolDb = 1e-6;

double reward(double sinr_now_db, double sinr_prev_db, double target_db, int t, int tau, double reward_min,
              double reward_max);

}  // namespace volte
