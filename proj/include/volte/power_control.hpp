#pragma once

#include <array>
#include <optional>

namespace volte {

/// Power command in dB.
enum class PcCommand : int { kDown = -1, kHold = 0, kUp = 1 };

/// Agent action ids 0..4: hold, down x3, down x1, up x1, up x3.
struct PcAction {
  int id = 0;

  static constexpr int kCount = 5;

  PcCommand command() const;
  int repetitions() const;
  /// Net change in dB applied within the TTI (repetitions * command).
  int net_change_db() const { return repetitions() * static_cast<int>(command()); }
};

/// Last applied command direction: 0 unchanged, 1 increased, 2 decreased.
struct PcState {
  int id = 0;

  static constexpr int kCount = 3;

  static PcState from_command(PcCommand c);
  bool operator==(const PcState&) const = default;
};

/// Per-PRB transmit power of the serving cell.
struct PowerSetting {
  double tx_dbm = 13.0;
  double max_dbm = 33.0;
  /// Disabled unless configured; the closed-loop rule has no lower clamp.
  std::optional<double> min_dbm;
};

/// Equal split of the cell's maximum power across PRBs.
double fpa_power(double max_power_dbm, int n_prb);

struct PcStep {
  PowerSetting power;
  PcState state;
};

/// P_TX <- min(P_max, P_TX + eta * c); state follows the sign of c.
PcStep apply_pc_action(PcAction action, const PowerSetting& power);

}  // namespace volte
