#pragma once

// Voice-quality metrics: call retainability, QPSK error rates, voice packet
// error rate and a mean opinion score curve.

#include <span>
#include <string_view>
#include <vector>

namespace volte {

/// Fraction of the frame's tau TTIs whose effective SINR stayed above
/// `min_sinr_db`. The series may be shorter than tau (episode ended on the
/// target); missing TTIs carry no drop. Result clipped to [0, 1].
double retainability(std::span<const double> sinr_db, double min_sinr_db, int tau);

/// Gaussian tail probability Q(x).
double q_function(double x);

/// QPSK symbol error probability at symbol SNR `snr_linear`:
/// 2 Q(sqrt(g)) (1 - Q(sqrt(g)) / 2).
double qpsk_ser(double snr_linear);

/// QPSK (Gray-coded) bit error probability, Q(sqrt(2 Eb/N0)) with
/// Eb/N0 = snr / 2.
double qpsk_ber(double snr_linear);

enum class ErrorModel { kSymbol, kBit };

ErrorModel parse_error_model(std::string_view name);
std::string_view to_string(ErrorModel model);

struct VoicePacketModel {
  double codec_kbps = 23.85;
  double activity_factor = 0.7;
  double frame_ms = 20.0;
  int bits_per_symbol = 2;

  /// ceil(rate * frame * AF / bits_per_symbol).
  int symbols_per_packet() const;
  void validate() const;
};

/// 1 - (1 - p)^units.
double packet_error_rate(double unit_error_prob, int units);
double packet_error_rate(double symbol_error_prob, const VoicePacketModel& model);

/// Monotone map from packet error rate to MOS:
///   mos = min + (max - min) * (1 - ln(1 + k per) / ln(1 + k)).
struct MosCurveConfig {
  double max_mos = 4.5;
  double min_mos = 1.0;
  double steepness = 100.0;

  void validate() const;
};

double mos(double per, const MosCurveConfig& curve = {});

struct MetricsConfig {
  double min_sinr_db = 0.0;
  ErrorModel error_model = ErrorModel::kSymbol;
  VoicePacketModel packet;
  MosCurveConfig mos_curve;

  void validate() const;
};

/// Per-TTI voice packet error rate for an effective-SINR series in dB.
std::vector<double> per_series(std::span<const double> sinr_db, const MetricsConfig& config);

struct VoiceQuality {
  double retainability = 0.0;
  double mean_per = 0.0;
  double mos = 0.0;
  std::vector<double> per;
};

VoiceQuality evaluate_voice_quality(std::span<const double> sinr_db, int tau, const MetricsConfig& config);

}  // namespace volte
