#include "doctest.h"

#include <set>

#include "volte/config.hpp"
#include "volte/episode.hpp"
#include "volte/experiment.hpp"

using namespace volte;

namespace {

struct Fixture {
  RadioConfig radio;
  FaultConfig faults;
  LearningParams learning;
  ClusterLayout layout = generate_cluster(radio.cluster);
  EpisodeSetup setup;

  Fixture() {
    faults.distribution = ActionDistribution::no_faults();
    setup.faults = &faults;
  }

  EpisodeEnvironment env(std::uint64_t seed) const {
    const RandomStream root = master_stream(seed);
    return EpisodeEnvironment(radio, layout, learning.initial_sinr_db, root.split("placement"), root.split("ici"));
  }
  EpisodeStreams streams(std::uint64_t seed) const {
    const RandomStream root = master_stream(seed);
    return {root.split("faults"), root.split("exploration")};
  }
};

}  // namespace

TEST_CASE("up-by-three from 4 dB reaches the target at t=1") {
  Fixture f;
  f.setup.forced_action = 4;
  Agent agent(f.learning);
  auto env = f.env(1);
  const EpisodeResult r = run_episode(env, agent, f.setup, 1, f.streams(1));
  REQUIRE(r.trace.size() == 1);
  CHECK(r.status == TerminalStatus::kTargetMet);
  CHECK(r.trace[0].reward == f.learning.reward_max);
  CHECK(r.trace[0].tx_dbm == 16.0);
  CHECK(r.final_sinr_db == doctest::Approx(7.0).epsilon(1e-12));
}

TEST_CASE("disabled agent without faults holds 4 dB and times out") {
  Fixture f;
  f.setup.forced_action = 0;
  Agent agent(f.learning);
  auto env = f.env(2);
  const EpisodeResult r = run_episode(env, agent, f.setup, 1, f.streams(2));
  REQUIRE(r.trace.size() == 20);
  for (const auto& rec : r.trace) CHECK(rec.sinr_db == 4.0);
  CHECK(r.status == TerminalStatus::kTimeout);
  CHECK(r.trace.back().reward == f.learning.reward_min);
}

TEST_CASE("episodes are bit-reproducible under a fixed seed") {
  Fixture f;
  f.faults.distribution = ActionDistribution::worst_case();
  auto run = [&] {
    Agent agent(f.learning);
    auto env = f.env(3);
    return run_episode(env, agent, f.setup, 1, f.streams(3)).trace;
  };
  CHECK(run() == run());
}

TEST_CASE("p0 = 1 gives a trajectory identical to the fault-free evaluation") {
  Fixture f;
  Agent agent(f.learning);
  auto env = f.env(4);
  const auto check_env = f.env(4);
  const EpisodeResult r = run_episode(env, agent, f.setup, 1, f.streams(4));
  for (const auto& rec : r.trace) {
    CHECK(rec.network_action == 0);
    CHECK(rec.register_bits == 0);
    CHECK(rec.sinr_db == check_env.effective_sinr_db(rec.tx_dbm, FaultRegister::cleared(1.5)));
  }
}

TEST_CASE("episode invariants over many faulted episodes") {
  Fixture f;
  f.faults.distribution = ActionDistribution::worst_case();
  Agent agent(f.learning);
  double eps_prev = agent.epsilon;
  const std::set<double> codomain{f.learning.reward_min, -1.0, 0.0, 1.0, f.learning.reward_max};

  for (std::uint64_t z = 1; z <= 300; ++z) {
    auto env = f.env(100 + z);
    const QTable before = agent.q;
    const EpisodeResult r = run_episode(env, agent, f.setup, static_cast<int>(z), f.streams(100 + z));
    CHECK(r.trace.size() >= 1);
    CHECK(r.trace.size() <= static_cast<std::size_t>(f.learning.ttis_per_episode));
    CHECK((r.status == TerminalStatus::kTargetMet) == (r.final_sinr_db >= f.learning.target_sinr_db));
    CHECK(agent.epsilon <= eps_prev);
    CHECK(agent.epsilon >= f.learning.epsilon_min);
    eps_prev = agent.epsilon;

    QTable touched = QTable::Zero();
    for (const auto& rec : r.trace) {
      CHECK(codomain.count(rec.reward) == 1);
      CHECK(rec.tx_dbm <= 33.0);
      touched(rec.state, rec.action) = 1.0;
    }
    const QTable changed = (agent.q - before).cwiseAbs();
    for (int s = 0; s < 3; ++s)
      for (int a = 0; a < 5; ++a)
        if (touched(s, a) == 0.0) CHECK(changed(s, a) == 0.0);
    CHECK(agent.q.allFinite());
  }
}

TEST_CASE("state column follows the previous command") {
  Fixture f;
  f.faults.distribution = ActionDistribution::worst_case();
  Agent agent(f.learning);
  auto env = f.env(9);
  const EpisodeResult r = run_episode(env, agent, f.setup, 1, f.streams(9));
  CHECK(r.trace.front().state == 0);
  for (std::size_t i = 1; i < r.trace.size(); ++i) {
    const int c = r.trace[i - 1].command;
    CHECK(r.trace[i].state == (c == 0 ? 0 : (c > 0 ? 1 : 2)));
  }
}

TEST_CASE("per-episode epsilon schedule decays once per episode") {
  Fixture f;
  f.learning.schedule = EpsilonSchedule::kPerEpisode;
  Agent agent(f.learning);
  auto env = f.env(5);
  run_episode(env, agent, f.setup, 1, f.streams(5));
  CHECK(agent.epsilon == doctest::Approx(0.99));
}

TEST_CASE("fresh-table mode resets Q at each episode") {
  Fixture f;
  f.learning.persist_q = false;
  f.setup.forced_action = 4;
  Agent agent(f.learning);
  for (int z = 1; z <= 3; ++z) {
    auto env = f.env(static_cast<std::uint64_t>(z));
    run_episode(env, agent, f.setup, z, f.streams(static_cast<std::uint64_t>(z)));
  }
  // One r_max update from zero each time, never compounded.
  CHECK(agent.q(0, 4) == doctest::Approx(f.learning.learning_rate * f.learning.reward_max));
}

TEST_CASE("FPA episode runs every TTI with no commands") {
  Fixture f;
  f.faults.distribution = ActionDistribution::worst_case();
  auto env = f.env(6);
  const EpisodeResult r = run_fpa_episode(env, f.learning, f.setup, 1, f.streams(6));
  REQUIRE(r.trace.size() == 20);
  for (const auto& rec : r.trace) {
    CHECK(rec.command == 0);
    CHECK(rec.repetitions == 0);
    CHECK(rec.tx_dbm == 13.0);
    CHECK(rec.sinr_db <= 4.0);
  }
}

TEST_CASE("greedy policy after fault-free training raises power from state 0") {
  ExperimentConfig cfg = parse_config("[faults]\np0 = 1\np1 = 0\np2 = 0\np3 = 0\np4 = 0\np5 = 0\np6 = 0\n");
  const ArmRun run = run_arm(cfg, Arm::kQlearn, 1);
  const int a = greedy_action(run.q, 0);
  CHECK((a == 3 || a == 4));
}
