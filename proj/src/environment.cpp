#include "volte/environment.hpp"

#include <cmath>

#include "volte/units.hpp"

namespace volte {

void RadioConfig::validate() const {
  if (!(cluster.side_length_m > 0.0)) throw ConfigError("must be positive", "radio.side_length_m");
  if (!std::isfinite(cluster.max_power_dbm)) throw ConfigError("must be finite", "radio.max_power_dbm");
  if (!(ues.intensity_per_m2 > 0.0)) throw ConfigError("must be positive", "radio.intensity_per_m2");
  if (ues.max_ues < 1) throw ConfigError("must be at least 1", "radio.max_ues");
  if (!(path_loss.carrier_ghz > 0.0)) throw ConfigError("must be positive", "radio.carrier_ghz");
  if (!(path_loss.min_distance_m > 0.0)) throw ConfigError("must be positive", "radio.min_distance_m");
  if (!(path_loss.exponent > 0.0)) throw ConfigError("must be positive", "radio.path_loss_exponent");
  if (!(budget.misc_loss_db >= 0.0)) throw ConfigError("must be non-negative", "radio.misc_loss_db");
  if (!std::isfinite(budget.noise_power_dbm)) throw ConfigError("must be finite", "radio.noise_power_dbm");
  if (budget.n_prb < 1) throw ConfigError("must be at least 1", "radio.n_prb");
  if (!(bandwidth_mhz > 0.0)) throw ConfigError("must be positive", "radio.bandwidth_mhz");
  if (initial_power_dbm > cluster.max_power_dbm) {
    throw ConfigError("exceeds radio.max_power_dbm", "radio.initial_power_dbm");
  }
  if (min_power_dbm && *min_power_dbm > initial_power_dbm) {
    throw ConfigError("exceeds radio.initial_power_dbm", "radio.min_power_dbm");
  }
}

EpisodeEnvironment::EpisodeEnvironment(const RadioConfig& config, const ClusterLayout& layout,
                                       double initial_sinr_db, RandomStream placement, RandomStream ici)
    : config_(&config),
      layout_(&layout),
      ues_(sample_ues(layout, config.ues, placement)),
      ici_(sample_ici(layout.neighbor_count(), config.ici_policy, ici)),
      ici_rng_(ici),
      air_loss_db_(air_loss_matrix(layout, ues_.serving(), config.path_loss)),
      noise_mw_(dbm_to_mw(config.budget.noise_power_dbm)),
      initial_sinr_db_(initial_sinr_db) {
  anchor_raw_db_ = evaluate(config.initial_power_dbm, FaultRegister::cleared(1.5)).raw_db;
}

Eigen::MatrixXd EpisodeEnvironment::received_mw(double tx_dbm, const LinkBudgetParams& serving_budget) const {
  const auto& cells = layout_->cells;
  const auto& ues = ues_.serving();
  Eigen::MatrixXd rx(air_loss_db_.rows(), air_loss_db_.cols());
  for (Eigen::Index i = 0; i < rx.rows(); ++i) {
    const double ue_gain = ues[static_cast<std::size_t>(i)].antenna_gain_dbi;
    for (Eigen::Index j = 0; j < rx.cols(); ++j) {
      const auto& cell = cells[static_cast<std::size_t>(j)];
      const bool serving = j == 0;
      const double p_tx = serving ? tx_dbm : config_->neighbor_power_dbm;
      const double misc = serving ? serving_budget.misc_loss_db : config_->budget.misc_loss_db;
      rx(i, j) = dbm_to_mw(received_power_dbm(p_tx, cell.antenna_gain_dbi, misc, air_loss_db_(i, j), ue_gain));
    }
  }
  return rx;
}

SinrEvaluation EpisodeEnvironment::evaluate(double tx_dbm, const FaultRegister& reg) const {
  const LinkBudgetParams budget = faulted_budget(config_->budget, reg);
  const Eigen::MatrixXd rx = received_mw(tx_dbm, budget);

  SinrEvaluation out;
  if (reg.neighbor_down) {
    const double max_mw = dbm_to_mw(layout_->serving().max_power_dbm);
    out.per_ue_linear = rx.col(0).unaryExpr([&](double p) {
      return neighbor_down_sinr_bound(p, noise_mw_, layout_->size(), max_mw);
    });
    out.used_neighbor_down_bound = true;
  } else {
    out.per_ue_linear = sinr_all(rx, ici_.coefficients, noise_mw_);
  }
  out.raw_db = volte::effective_sinr_db(out.per_ue_linear);
  out.calibrated_db = initial_sinr_db_ + (out.raw_db - anchor_raw_db_);
  return out;
}

double EpisodeEnvironment::effective_sinr_db(double tx_dbm, const FaultRegister& reg) const {
  return evaluate(tx_dbm, reg).calibrated_db;
}

void EpisodeEnvironment::advance_tti() {
  if (ici_.policy == IciPolicy::kPerTti) ici_ = sample_ici(layout_->neighbor_count(), ici_.policy, ici_rng_);
}

}  // namespace volte
