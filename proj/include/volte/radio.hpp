#pragma once

// Radio environment of the indoor small-cell cluster: cell layout, UE
// placement, path loss, link budget and downlink SINR.

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "volte/error.hpp"
#include "volte/rng.hpp"
#include "volte/units.hpp"

namespace volte {

using Point2 = Eigen::Vector2d;

struct CellSite {
  int id = 0;
  Point2 position = Point2::Zero();
  double max_power_dbm = 33.0;
  double antenna_gain_dbi = 16.0;
  double antenna_height_m = 10.0;
};

/// Serving cell at the origin and one tier of four edge-adjacent square
/// cells. `cells[0]` is always the serving cell.
struct ClusterLayout {
  std::vector<CellSite> cells;
  int serving_cell_id = 0;
  double side_length_m = 10.0;

  const CellSite& serving() const { return cells.front(); }
  std::size_t neighbor_count() const { return cells.size() - 1; }
  std::size_t size() const { return cells.size(); }
};

struct ClusterConfig {
  double side_length_m = 10.0;
  double max_power_dbm = 33.0;
  double antenna_gain_dbi = 16.0;
  double antenna_height_m = 10.0;
};

ClusterLayout generate_cluster(const ClusterConfig& config);

struct UeRecord {
  int id = 0;
  Point2 position = Point2::Zero();
  double antenna_gain_dbi = -1.0;
  double height_m = 1.5;
};

struct UePopulation {
  /// Indexed like ClusterLayout::cells.
  std::vector<std::vector<UeRecord>> per_cell;
  double intensity_per_m2 = 0.1;
  int max_ues = 10;

  const std::vector<UeRecord>& serving() const { return per_cell.front(); }
};

struct UeConfig {
  double intensity_per_m2 = 0.1;
  int max_ues = 10;
  double antenna_gain_dbi = -1.0;
  double height_m = 1.5;
};

/// Per cell: N = min(max(Poisson(lambda * L^2), 1), max_ues) UEs placed
/// i.i.d. uniformly over the cell's square.
UePopulation sample_ues(const ClusterLayout& layout, const UeConfig& config, RandomStream& rng);

/// Truncated UE count for one cell, exposed for testing the count law.
int sample_ue_count(double mean, int max_ues, RandomStream& rng);

// ---------------------------------------------------------------------------
// Path loss

enum class PathLossKind { kCost231Hata, kLogDistance };

PathLossKind parse_path_loss_kind(std::string_view name);
std::string_view to_string(PathLossKind kind);

struct PathLossModel {
  PathLossKind kind = PathLossKind::kCost231Hata;
  double carrier_ghz = 2.6;
  double tx_height_m = 10.0;
  double rx_height_m = 1.5;
  double exponent = 2.0;  // log-distance only
  double min_distance_m = 1.0;
};

/// COST231-Hata, medium-sized city mobile-antenna correction, C = 0 dB.
/// Frequency in MHz, distance in km.
template <typename Scalar>
Scalar cost231_hata_db(Scalar freq_mhz, Scalar tx_height_m, Scalar rx_height_m, Scalar distance_km) {
  using std::log10;
  const Scalar log_f = log10(freq_mhz);
  const Scalar log_hb = log10(tx_height_m);
  const Scalar mobile_correction =
      (Scalar(1.1) * log_f - Scalar(0.7)) * rx_height_m - (Scalar(1.56) * log_f - Scalar(0.8));
  return Scalar(46.3) + Scalar(33.9) * log_f - Scalar(13.82) * log_hb - mobile_correction +
         (Scalar(44.9) - Scalar(6.55) * log_hb) * log10(distance_km);
}

/// Free-space loss at 1 m followed by a configurable decay exponent.
template <typename Scalar>
Scalar log_distance_db(Scalar freq_hz, Scalar exponent, Scalar distance_m) {
  using std::log10;
  constexpr double kPi = 3.14159265358979323846;
  constexpr double kLightSpeed = 299792458.0;
  const Scalar reference = Scalar(20) * log10(Scalar(4 * kPi) * freq_hz / Scalar(kLightSpeed));
  return reference + Scalar(10) * exponent * log10(distance_m);
}

/// Air-interface loss L_a in dB between two points; never negative.
double path_loss(const Point2& tx, const Point2& rx, const PathLossModel& model);

// ---------------------------------------------------------------------------
// Link budget and SINR

struct LinkBudgetParams {
  double misc_loss_db = 0.0;
  double noise_power_dbm = -114.44727494896694;
  double carrier_ghz = 2.6;
  int n_prb = 100;
};

/// Thermal noise over `bandwidth_hz` plus receiver noise figure.
double thermal_noise_dbm(double bandwidth_hz, double noise_figure_db);

/// P_UE = P_TX + G_TX - L_m - L_a + G_UE, all in dB units.
template <typename Scalar>
constexpr Scalar received_power_dbm(Scalar tx_dbm, Scalar tx_gain_dbi, Scalar misc_loss_db, Scalar air_loss_db,
                                    Scalar ue_gain_dbi) {
  return tx_dbm + tx_gain_dbi - misc_loss_db - air_loss_db + ue_gain_dbi;
}

double received_power(double tx_dbm, const CellSite& cell, const LinkBudgetParams& budget, double air_loss_db,
                      const UeRecord& ue);

enum class IciPolicy { kPerEpisode, kPerTti };

IciPolicy parse_ici_policy(std::string_view name);
std::string_view to_string(IciPolicy policy);

/// Same-PRB collision proportion k_j for each neighbor, in layout order.
struct IciProfile {
  Eigen::VectorXd coefficients;
  IciPolicy policy = IciPolicy::kPerEpisode;
};

IciProfile sample_ici(std::size_t neighbor_count, IciPolicy policy, RandomStream& rng);

/// SINR of one UE. `received_mw` holds the UE's received power from every
/// cell with the serving cell first; `ici` has one coefficient per neighbor.
template <typename DerivedP, typename DerivedK>
typename DerivedP::Scalar sinr_per_ue(const Eigen::MatrixBase<DerivedP>& received_mw,
                                      const Eigen::MatrixBase<DerivedK>& ici,
                                      typename DerivedP::Scalar noise_mw) {
  const auto n = received_mw.size() - 1;
  const auto interference = ici.head(n).dot(received_mw.tail(n));
  return received_mw(0) / (noise_mw + interference);
}

/// Vectorised SINR for a UE x cell matrix of received powers (serving column
/// first).
template <typename DerivedP, typename DerivedK>
Eigen::Matrix<typename DerivedP::Scalar, Eigen::Dynamic, 1> sinr_all(const Eigen::MatrixBase<DerivedP>& received_mw,
                                                                     const Eigen::MatrixBase<DerivedK>& ici,
                                                                     typename DerivedP::Scalar noise_mw) {
  const auto n = received_mw.cols() - 1;
  const auto interference = (received_mw.rightCols(n) * ici.head(n)).array() + noise_mw;
  return (received_mw.col(0).array() / interference).matrix();
}

/// 10 log10 of the arithmetic mean of linear SINRs.
template <typename Derived>
typename Derived::Scalar effective_sinr_db(const Eigen::MatrixBase<Derived>& sinr_linear) {
  using Scalar = typename Derived::Scalar;
  if (sinr_linear.size() == 0) throw DomainError("effective_sinr: empty UE set");
  if ((sinr_linear.array() <= Scalar(0)).any()) throw DomainError("effective_sinr: SINR must be positive");
  return linear_to_db(sinr_linear.mean());
}

double effective_sinr_db(const std::vector<double>& sinr_linear);

constexpr double sinr_delta(double now_db, double prev_db) { return now_db - prev_db; }

/// Matrix of air losses (UE x cell) for the serving cell's UEs.
Eigen::MatrixXd air_loss_matrix(const ClusterLayout& layout, const std::vector<UeRecord>& ues,
                                const PathLossModel& model);

}  // namespace volte
