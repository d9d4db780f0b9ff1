#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "volte/error.hpp"
#include "volte/power_control.hpp"
#include "volte/rng.hpp"

using namespace volte;

TEST_CASE("fixed power allocation") {
  CHECK(fpa_power(33.0, 100) == 13.0);
  CHECK(fpa_power(33.0, 1) == 33.0);
  CHECK(fpa_power(30.0, 50) == doctest::Approx(13.010299956639813).epsilon(1e-12));
  CHECK_THROWS_AS(fpa_power(33.0, 0), DomainError);
}

TEST_CASE("action table") {
  CHECK(PcAction{0}.command() == PcCommand::kHold);
  CHECK(PcAction{0}.repetitions() == 1);
  CHECK(PcAction{1}.net_change_db() == -3);
  CHECK(PcAction{2}.net_change_db() == -1);
  CHECK(PcAction{3}.net_change_db() == 1);
  CHECK(PcAction{4}.net_change_db() == 3);
  CHECK_THROWS_AS(PcAction{5}.command(), std::out_of_range);
}

TEST_CASE("closed-loop update examples") {
  const PowerSetting p{13.0, 33.0, std::nullopt};
  auto step = apply_pc_action(PcAction{4}, p);
  CHECK(step.power.tx_dbm == 16.0);
  CHECK(step.state.id == 1);

  step = apply_pc_action(PcAction{4}, PowerSetting{32.0, 33.0, std::nullopt});
  CHECK(step.power.tx_dbm == 33.0);
  CHECK(step.state.id == 1);

  step = apply_pc_action(PcAction{0}, p);
  CHECK(step.power.tx_dbm == 13.0);
  CHECK(step.state.id == 0);
}

TEST_CASE("state depends only on the sign of the command") {
  const PowerSetting p{13.0, 33.0, std::nullopt};
  for (int a = 0; a < PcAction::kCount; ++a) {
    const PcAction act{a};
    const int c = static_cast<int>(act.command());
    const int expected = c == 0 ? 0 : (c > 0 ? 1 : 2);
    CHECK(apply_pc_action(act, p).state.id == expected);
    CHECK(apply_pc_action(act, PowerSetting{33.0, 33.0, std::nullopt}).state.id == expected);
  }
}

TEST_CASE("inverse single-step actions restore power exactly") {
  const PowerSetting p{13.0, 33.0, std::nullopt};
  const auto up = apply_pc_action(PcAction{3}, p);
  const auto back = apply_pc_action(PcAction{2}, up.power);
  CHECK(back.power.tx_dbm == 13.0);
}

TEST_CASE("no lower clamp unless configured") {
  PowerSetting p{13.0, 33.0, std::nullopt};
  for (int i = 0; i < 50; ++i) p = apply_pc_action(PcAction{1}, p).power;
  CHECK(p.tx_dbm == 13.0 - 150.0);

  PowerSetting q{13.0, 33.0, 0.0};
  for (int i = 0; i < 50; ++i) q = apply_pc_action(PcAction{1}, q).power;
  CHECK(q.tx_dbm == 0.0);
}

TEST_CASE("clamp safety under fuzzed action sequences") {
  RandomStream rng = master_stream(17);
  bool ok = true;
  for (int seq = 0; seq < 1000000; ++seq) {
    PowerSetting p{13.0, 33.0, std::nullopt};
    for (int t = 0; t < 20; ++t) {
      p = apply_pc_action(PcAction{static_cast<int>(rng.uniform_index(PcAction::kCount))}, p).power;
      ok = ok && p.tx_dbm <= 33.0;
    }
  }
  CHECK(ok);
}
