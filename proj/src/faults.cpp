#include "volte/faults.hpp"

#include <stdexcept>

namespace volte {

NetworkAction network_action_from_int(int v) {
  if (v < 0 || v >= kNetworkActionCount) throw std::out_of_range("network action out of range: " + std::to_string(v));
  return static_cast<NetworkAction>(v);
}

ActionDistribution ActionDistribution::worst_case() {
  ActionDistribution d;
  d.p[0] = 5.0 / 11.0;
  for (int i = 1; i < kNetworkActionCount; ++i) d.p[static_cast<std::size_t>(i)] = 1.0 / 11.0;
  return d;
}

void ActionDistribution::validate() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= 0.0 && p[i] <= 1.0)) throw ConfigError("probability must lie in [0,1]", "faults.p" + std::to_string(i));
    sum += p[i];
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw ConfigError("probabilities sum to " + std::to_string(sum) + ", expected 1", "faults");
  }
}

void FaultConfig::validate() const {
  distribution.validate();
  if (!(feeder_loss_db >= 0.0)) throw ConfigError("must be non-negative", "faults.feeder_loss_db");
  if (!(vswr_nominal > 1.0)) throw ConfigError("VSWR must exceed 1", "faults.vswr_nominal");
  if (!(vswr_draw_min > vswr_nominal)) throw ConfigError("must exceed faults.vswr_nominal", "faults.vswr_min");
  if (!(vswr_draw_max >= vswr_draw_min)) throw ConfigError("must be >= faults.vswr_min", "faults.vswr_max");
}

bool is_legal(NetworkAction action, const FaultRegister& reg) {
  switch (action) {
    case NetworkAction::kNormal:
      return true;
    case NetworkAction::kFeederFault:
      return !reg.feeder_fault;
    case NetworkAction::kNeighborDown:
      return !reg.neighbor_down;
    case NetworkAction::kVswrOut:
      return !reg.vswr_out;
    case NetworkAction::kFeederCleared:
      return reg.feeder_fault;
    case NetworkAction::kNeighborUp:
      return reg.neighbor_down;
    case NetworkAction::kVswrBack:
      return reg.vswr_out;
  }
  return false;
}

NetworkAction sample_action(const FaultRegister& reg, const ActionDistribution& dist, RandomStream& rng) {
  std::array<double, kNetworkActionCount> w{};
  double total = 0.0;
  for (int i = 0; i < kNetworkActionCount; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    w[idx] = is_legal(static_cast<NetworkAction>(i), reg) ? dist.p[idx] : 0.0;
    total += w[idx];
  }
  // The draw is consumed unconditionally so the stream position never
  // depends on the register contents.
  const double u = rng.uniform() * total;
  if (total <= 0.0) return NetworkAction::kNormal;

  double acc = 0.0;
  int last_legal = 0;
  for (int i = 0; i < kNetworkActionCount; ++i) {
    const double wi = w[static_cast<std::size_t>(i)];
    if (wi <= 0.0) continue;
    last_legal = i;
    acc += wi;
    if (u < acc) return static_cast<NetworkAction>(i);
  }
  return static_cast<NetworkAction>(last_legal);
}

double vswr_delta(double nominal, double current) {
  if (!(nominal > 1.0) || !(current > 1.0)) throw DomainError("vswr_delta: VSWR must exceed 1");
  const double ratio = std::abs((nominal + 1.0) / (nominal - 1.0)) * std::abs((current - 1.0) / (current + 1.0));
  return 10.0 * std::log10(ratio * ratio);
}

double draw_vswr(const FaultConfig& config, RandomStream& rng) {
  return rng.uniform(config.vswr_draw_min, config.vswr_draw_max);
}

FaultRegister apply_action(NetworkAction action, const FaultRegister& reg, const FaultConfig& config,
                           double drawn_vswr) {
  if (!is_legal(action, reg)) {
    throw std::logic_error("illegal network action " + std::to_string(to_int(action)) + " for register " +
                           std::to_string(reg.bits()));
  }
  FaultRegister next = reg;
  switch (action) {
    case NetworkAction::kNormal:
      break;
    case NetworkAction::kFeederFault:
      next.feeder_fault = true;
      next.feeder_loss_db = config.feeder_loss_db;
      break;
    case NetworkAction::kNeighborDown:
      next.neighbor_down = true;
      break;
    case NetworkAction::kVswrOut:
      next.vswr_out = true;
      next.vswr_current = drawn_vswr;
      next.vswr_loss_db = std::abs(vswr_delta(reg.vswr_nominal, drawn_vswr));
      break;
    case NetworkAction::kFeederCleared:
      next.feeder_fault = false;
      next.feeder_loss_db = 0.0;
      break;
    case NetworkAction::kNeighborUp:
      next.neighbor_down = false;
      break;
    case NetworkAction::kVswrBack:
      next.vswr_out = false;
      next.vswr_current = reg.vswr_nominal;
      next.vswr_loss_db = 0.0;
      break;
  }
  return next;
}

LinkBudgetParams faulted_budget(const LinkBudgetParams& base, const FaultRegister& reg) {
  LinkBudgetParams out = base;
  out.misc_loss_db = base.misc_loss_db + reg.feeder_loss_db + reg.vswr_loss_db;
  return out;
}

}  // namespace volte
