#pragma once

// Per-episode radio environment: one UE drop, one ICI draw, and the
// calibrated effective-SINR evaluation used by both power-control arms.

#include <Eigen/Core>

#include <optional>

#include "volte/faults.hpp"
#include "volte/radio.hpp"
#include "volte/rng.hpp"

namespace volte {

struct RadioConfig {
  ClusterConfig cluster;
  UeConfig ues;
  PathLossModel path_loss;
  LinkBudgetParams budget;
  IciPolicy ici_policy = IciPolicy::kPerEpisode;
  double bandwidth_mhz = 20.0;
  double initial_power_dbm = 13.0;
  /// Per-PRB power of every neighbor cell.
  double neighbor_power_dbm = 13.0;
  std::optional<double> min_power_dbm;

  void validate() const;
};

/// Snapshot of the quantities behind one effective-SINR evaluation.
struct SinrEvaluation {
  Eigen::VectorXd per_ue_linear;
  double raw_db = 0.0;
  double calibrated_db = 0.0;
  bool used_neighbor_down_bound = false;
};

class EpisodeEnvironment {
 public:
  /// Samples UEs from `placement` and k_j from `ici`, then anchors the
  /// calibration so that the geometry at the initial power and with no
  /// faults reports exactly `initial_sinr_db`.
  EpisodeEnvironment(const RadioConfig& config, const ClusterLayout& layout, double initial_sinr_db,
                     RandomStream placement, RandomStream ici);

  /// Reported effective SINR for the serving cell at per-PRB power `tx_dbm`.
  double effective_sinr_db(double tx_dbm, const FaultRegister& reg) const;
  SinrEvaluation evaluate(double tx_dbm, const FaultRegister& reg) const;

  /// Called once per TTI; resamples k_j under the per-TTI policy.
  void advance_tti();

  const UePopulation& ues() const { return ues_; }
  const IciProfile& ici() const { return ici_; }
  double calibration_offset_db() const { return initial_sinr_db_ - anchor_raw_db_; }
  double noise_mw() const { return noise_mw_; }

 private:
  Eigen::MatrixXd received_mw(double tx_dbm, const LinkBudgetParams& serving_budget) const;

  const RadioConfig* config_;
  const ClusterLayout* layout_;
  UePopulation ues_;
  IciProfile ici_;
  RandomStream ici_rng_;
  Eigen::MatrixXd air_loss_db_;
  double noise_mw_ = 0.0;
  double initial_sinr_db_ = 0.0;
  double anchor_raw_db_ = 0.0;
};

}  // namespace volte
