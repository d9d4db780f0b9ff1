#include "volte/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "volte/error.hpp"
#include "volte/units.hpp"

namespace volte {

double retainability(std::span<const double> sinr_db, double min_sinr_db, int tau) {
  if (sinr_db.empty()) throw DomainError("retainability: empty SINR series");
  if (tau < 1) throw DomainError("retainability: tau must be at least 1");
  if (sinr_db.size() > static_cast<std::size_t>(tau)) {
    throw DomainError("retainability: series longer than tau");
  }
  const auto drops = std::count_if(sinr_db.begin(), sinr_db.end(), [&](double g) { return g <= min_sinr_db; });
  return std::clamp(1.0 - static_cast<double>(drops) / static_cast<double>(tau), 0.0, 1.0);
}

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double qpsk_ser(double snr_linear) {
  if (!(snr_linear >= 0.0)) throw DomainError("qpsk_ser: SNR must be non-negative");
  const double q = q_function(std::sqrt(snr_linear));
  return 2.0 * q * (1.0 - 0.5 * q);
}

double qpsk_ber(double snr_linear) {
  if (!(snr_linear >= 0.0)) throw DomainError("qpsk_ber: SNR must be non-negative");
  return q_function(std::sqrt(snr_linear));
}

ErrorModel parse_error_model(std::string_view name) {
  if (name == "symbol") return ErrorModel::kSymbol;
  if (name == "bit") return ErrorModel::kBit;
  throw ConfigError("expected symbol or bit, got '" + std::string(name) + "'", "metrics.error_model");
}

std::string_view to_string(ErrorModel model) { return model == ErrorModel::kBit ? "bit" : "symbol"; }

int VoicePacketModel::symbols_per_packet() const {
  const double bits = codec_kbps * 1e3 * frame_ms * 1e-3 * activity_factor;
  return static_cast<int>(std::ceil(bits / bits_per_symbol));
}

void VoicePacketModel::validate() const {
  if (!(codec_kbps > 0.0)) throw ConfigError("must be positive", "metrics.codec_kbps");
  if (!(activity_factor > 0.0 && activity_factor <= 1.0)) throw ConfigError("must lie in (0,1]", "metrics.activity_factor");
  if (!(frame_ms > 0.0)) throw ConfigError("must be positive", "metrics.frame_ms");
  if (bits_per_symbol < 1) throw ConfigError("must be at least 1", "metrics.bits_per_symbol");
}

double packet_error_rate(double unit_error_prob, int units) {
  if (!(unit_error_prob >= 0.0 && unit_error_prob <= 1.0)) throw DomainError("packet_error_rate: probability outside [0,1]");
  if (units < 0) throw DomainError("packet_error_rate: negative unit count");
  if (unit_error_prob == 1.0) return units > 0 ? 1.0 : 0.0;
  return std::clamp(-std::expm1(static_cast<double>(units) * std::log1p(-unit_error_prob)), 0.0, 1.0);
}

double packet_error_rate(double symbol_error_prob, const VoicePacketModel& model) {
  return packet_error_rate(symbol_error_prob, model.symbols_per_packet());
}

void MosCurveConfig::validate() const {
  if (!(max_mos > min_mos && max_mos <= 4.5)) throw ConfigError("must lie in (mos_min, 4.5]", "metrics.mos_max");
  if (min_mos != 1.0) throw ConfigError("MOS floor is fixed at 1.0", "metrics.mos_min");
  if (!(steepness > 0.0)) throw ConfigError("must be positive", "metrics.mos_steepness");
}

double mos(double per, const MosCurveConfig& curve) {
  if (!(per >= 0.0 && per <= 1.0)) throw DomainError("mos: packet error rate outside [0,1]");
  const double shape = std::log1p(curve.steepness * per) / std::log1p(curve.steepness);
  return std::clamp(curve.min_mos + (curve.max_mos - curve.min_mos) * (1.0 - shape), curve.min_mos, curve.max_mos);
}

void MetricsConfig::validate() const {
  if (!std::isfinite(min_sinr_db)) throw ConfigError("must be finite", "metrics.min_sinr_db");
  packet.validate();
  mos_curve.validate();
}

std::vector<double> per_series(std::span<const double> sinr_db, const MetricsConfig& config) {
  const int symbols = config.packet.symbols_per_packet();
  std::vector<double> out;
  out.reserve(sinr_db.size());
  for (double g_db : sinr_db) {
    const double g = db_to_linear(g_db);
    if (config.error_model == ErrorModel::kBit) {
      out.push_back(packet_error_rate(qpsk_ber(g), symbols * config.packet.bits_per_symbol));
    } else {
      out.push_back(packet_error_rate(qpsk_ser(g), symbols));
    }
  }
  return out;
}

VoiceQuality evaluate_voice_quality(std::span<const double> sinr_db, int tau, const MetricsConfig& config) {
  VoiceQuality q;
  q.retainability = retainability(sinr_db, config.min_sinr_db, tau);
  q.per = per_series(sinr_db, config);
  q.mean_per = std::accumulate(q.per.begin(), q.per.end(), 0.0) / static_cast<double>(q.per.size());
  q.mos = mos(q.mean_per, config.mos_curve);
  return q;
}

}  // namespace volte
