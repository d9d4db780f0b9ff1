#pragma once

// Network-action process (feeder fault, neighbor down, VSWR alarm and their
// clears) and its effect on the serving cell's link budget.

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "volte/radio.hpp"
#include "volte/rng.hpp"

namespace volte {

enum class NetworkAction : int {
  kNormal = 0,
  kFeederFault = 1,
  kNeighborDown = 2,
  kVswrOut = 3,
  kFeederCleared = 4,
  kNeighborUp = 5,
  kVswrBack = 6,
};

inline constexpr int kNetworkActionCount = 7;

constexpr int to_int(NetworkAction a) { return static_cast<int>(a); }
NetworkAction network_action_from_int(int v);

struct ActionDistribution {
  std::array<double, kNetworkActionCount> p{1.0, 0, 0, 0, 0, 0, 0};

  /// p_0 = 5/11, p_1..p_6 = 1/11.
  static ActionDistribution worst_case();
  static ActionDistribution no_faults() { return {}; }

  /// Throws ConfigError unless every p_i is in [0,1] and they sum to 1.
  void validate() const;
};

/// Three independent fault classes. Loss components are kept per class so a
/// clear restores the budget bit-exactly.
struct FaultRegister {
  bool feeder_fault = false;
  bool neighbor_down = false;
  bool vswr_out = false;
  double vswr_nominal = 1.5;
  double vswr_current = 1.5;
  double feeder_loss_db = 0.0;
  double vswr_loss_db = 0.0;

  /// bit0 = feeder, bit1 = neighbor down, bit2 = VSWR.
  std::uint8_t bits() const {
    return static_cast<std::uint8_t>((feeder_fault ? 1 : 0) | (neighbor_down ? 2 : 0) | (vswr_out ? 4 : 0));
  }
  bool any() const { return bits() != 0; }

  static FaultRegister cleared(double vswr_nominal) {
    FaultRegister r;
    r.vswr_nominal = r.vswr_current = vswr_nominal;
    return r;
  }

  bool operator==(const FaultRegister&) const = default;
};

struct FaultConfig {
  ActionDistribution distribution = ActionDistribution::worst_case();
  double feeder_loss_db = 3.0;
  double vswr_nominal = 1.5;
  double vswr_draw_min = 2.0;
  double vswr_draw_max = 3.0;

  void validate() const;
};

bool is_legal(NetworkAction action, const FaultRegister& reg);

/// Draws one action from `dist` restricted to the actions legal for `reg`
/// (clear without a raised alarm, or re-raising an active fault, are
/// excluded and the remaining mass renormalised). Returns kNormal when no
/// legal action has positive mass.
NetworkAction sample_action(const FaultRegister& reg, const ActionDistribution& dist, RandomStream& rng);

/// Return-loss change when the VSWR moves from `nominal` to `current`.
/// Both must exceed 1.
double vswr_delta(double nominal, double current);

/// Per-UE SINR lower bound while a neighbor is down: every remaining
/// interferer is replaced by the maximum cell transmit power.
template <typename Scalar>
Scalar neighbor_down_sinr_bound(Scalar rx_serving_mw, Scalar noise_mw, std::size_t cluster_size,
                                Scalar max_power_mw) {
  if (cluster_size < 2) throw DomainError("neighbor_down_sinr_bound: cluster needs at least two cells");
  return rx_serving_mw / (noise_mw + Scalar(cluster_size - 2) * max_power_mw);
}

double draw_vswr(const FaultConfig& config, RandomStream& rng);

/// Applies `action` to the register. `drawn_vswr` is only read for kVswrOut.
/// Illegal actions throw std::logic_error.
FaultRegister apply_action(NetworkAction action, const FaultRegister& reg, const FaultConfig& config,
                           double drawn_vswr = 0.0);

/// Budget seen by the serving cell: base misc loss plus active fault losses.
LinkBudgetParams faulted_budget(const LinkBudgetParams& base, const FaultRegister& reg);

}  // namespace volte
