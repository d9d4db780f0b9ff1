#include "volte/power_control.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "volte/error.hpp"

namespace volte {

namespace {

struct ActionRow {
  PcCommand command;
  int repetitions;
};

// Action 0 carries no repetition; eta = 1 makes it a plain no-op.
constexpr std::array<ActionRow, PcAction::kCount> kActions{{
    {PcCommand::kHold, 1},
    {PcCommand::kDown, 3},
    {PcCommand::kDown, 1},
    {PcCommand::kUp, 1},
    {PcCommand::kUp, 3},
}};

const ActionRow& row(int id) {
  if (id < 0 || id >= PcAction::kCount) throw std::out_of_range("PC action id out of range: " + std::to_string(id));
  return kActions[static_cast<std::size_t>(id)];
}

}  // namespace

PcCommand PcAction::command() const { return row(id).command; }
int PcAction::repetitions() const { return row(id).repetitions; }

PcState PcState::from_command(PcCommand c) {
  switch (c) {
    case PcCommand::kHold:
      return {0};
    case PcCommand::kUp:
      return {1};
    case PcCommand::kDown:
      return {2};
  }
  return {0};
}

double fpa_power(double max_power_dbm, int n_prb) {
  if (n_prb < 1) throw DomainError("fpa_power: N_PRB must be at least 1");
  return max_power_dbm - 10.0 * std::log10(static_cast<double>(n_prb));
}

PcStep apply_pc_action(PcAction action, const PowerSetting& power) {
  PcStep out{power, PcState::from_command(action.command())};
  double next = power.tx_dbm + static_cast<double>(action.net_change_db());
  next = std::min(power.max_dbm, next);
  if (power.min_dbm) next = std::max(*power.min_dbm, next);
  out.power.tx_dbm = next;
  return out;
}

}  // namespace volte
