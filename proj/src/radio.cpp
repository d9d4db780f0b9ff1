#include "volte/radio.hpp"

#include <algorithm>
#include <cmath>

namespace volte {

ClusterLayout generate_cluster(const ClusterConfig& config) {
  if (!(config.side_length_m > 0.0) || !std::isfinite(config.side_length_m)) {
    throw ConfigError("side length must be positive and finite", "radio.side_length_m");
  }
  if (!std::isfinite(config.max_power_dbm)) throw ConfigError("must be finite", "radio.max_power_dbm");
  if (!std::isfinite(config.antenna_gain_dbi)) throw ConfigError("must be finite", "radio.antenna_gain_dbi");
  if (!(config.antenna_height_m > 0.0)) throw ConfigError("must be positive", "radio.antenna_height_m");

  const double L = config.side_length_m;
  const Point2 offsets[] = {{0.0, 0.0}, {L, 0.0}, {-L, 0.0}, {0.0, L}, {0.0, -L}};

  ClusterLayout layout;
  layout.side_length_m = L;
  layout.serving_cell_id = 0;
  int id = 0;
  for (const auto& p : offsets) {
    layout.cells.push_back(CellSite{id++, p, config.max_power_dbm, config.antenna_gain_dbi, config.antenna_height_m});
  }
  return layout;
}

int sample_ue_count(double mean, int max_ues, RandomStream& rng) {
  const auto drawn = rng.poisson(mean);
  const auto at_least_one = std::max<std::uint64_t>(drawn, 1);
  return static_cast<int>(std::min<std::uint64_t>(at_least_one, static_cast<std::uint64_t>(max_ues)));
}

UePopulation sample_ues(const ClusterLayout& layout, const UeConfig& config, RandomStream& rng) {
  if (!(config.intensity_per_m2 > 0.0)) throw ConfigError("intensity must be positive", "radio.intensity_per_m2");
  if (config.max_ues < 1) throw ConfigError("must be at least 1", "radio.max_ues");

  const double L = layout.side_length_m;
  const double mean = config.intensity_per_m2 * L * L;

  UePopulation pop;
  pop.intensity_per_m2 = config.intensity_per_m2;
  pop.max_ues = config.max_ues;
  pop.per_cell.reserve(layout.size());

  int next_id = 0;
  for (const auto& cell : layout.cells) {
    const int n = sample_ue_count(mean, config.max_ues, rng);
    std::vector<UeRecord> ues;
    ues.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const double x = rng.uniform(-L / 2, L / 2);
      const double y = rng.uniform(-L / 2, L / 2);
      ues.push_back(UeRecord{next_id++, cell.position + Point2(x, y), config.antenna_gain_dbi, config.height_m});
    }
    pop.per_cell.push_back(std::move(ues));
  }
  return pop;
}

PathLossKind parse_path_loss_kind(std::string_view name) {
  if (name == "cost231" || name == "cost231_hata") return PathLossKind::kCost231Hata;
  if (name == "log_distance") return PathLossKind::kLogDistance;
  throw ConfigError("unsupported path loss model '" + std::string(name) + "'", "radio.path_loss_model");
}

std::string_view to_string(PathLossKind kind) {
  switch (kind) {
    case PathLossKind::kCost231Hata:
      return "cost231";
    case PathLossKind::kLogDistance:
      return "log_distance";
  }
  return "?";
}

double path_loss(const Point2& tx, const Point2& rx, const PathLossModel& model) {
  const double d = std::max((tx - rx).norm(), model.min_distance_m);
  double loss = 0.0;
  switch (model.kind) {
    case PathLossKind::kCost231Hata:
      loss = cost231_hata_db(model.carrier_ghz * 1e3, model.tx_height_m, model.rx_height_m, d / 1e3);
      break;
    case PathLossKind::kLogDistance:
      loss = log_distance_db(model.carrier_ghz * 1e9, model.exponent, d);
      break;
  }
  return std::max(loss, 0.0);
}

double thermal_noise_dbm(double bandwidth_hz, double noise_figure_db) {
  return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

double received_power(double tx_dbm, const CellSite& cell, const LinkBudgetParams& budget, double air_loss_db,
                      const UeRecord& ue) {
  return received_power_dbm(tx_dbm, cell.antenna_gain_dbi, budget.misc_loss_db, air_loss_db, ue.antenna_gain_dbi);
}

IciPolicy parse_ici_policy(std::string_view name) {
  if (name == "per_episode") return IciPolicy::kPerEpisode;
  if (name == "per_tti") return IciPolicy::kPerTti;
  throw ConfigError("expected per_episode or per_tti, got '" + std::string(name) + "'", "radio.ici_policy");
}

std::string_view to_string(IciPolicy policy) {
  return policy == IciPolicy::kPerTti ? "per_tti" : "per_episode";
}

IciProfile sample_ici(std::size_t neighbor_count, IciPolicy policy, RandomStream& rng) {
  IciProfile profile;
  profile.policy = policy;
  profile.coefficients.resize(static_cast<Eigen::Index>(neighbor_count));
  for (Eigen::Index j = 0; j < profile.coefficients.size(); ++j) profile.coefficients(j) = rng.uniform();
  return profile;
}

double effective_sinr_db(const std::vector<double>& sinr_linear) {
  return effective_sinr_db(Eigen::Map<const Eigen::VectorXd>(sinr_linear.data(), static_cast<Eigen::Index>(sinr_linear.size())));
}

Eigen::MatrixXd air_loss_matrix(const ClusterLayout& layout, const std::vector<UeRecord>& ues,
                                const PathLossModel& model) {
  Eigen::MatrixXd loss(static_cast<Eigen::Index>(ues.size()), static_cast<Eigen::Index>(layout.size()));
  for (std::size_t i = 0; i < ues.size(); ++i) {
    for (std::size_t j = 0; j < layout.size(); ++j) {
      loss(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          path_loss(layout.cells[j].position, ues[i].position, model);
    }
  }
  return loss;
}

}  // namespace volte
