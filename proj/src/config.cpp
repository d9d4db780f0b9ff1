#include "volte/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <openssl/evp.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "volte/error.hpp"

namespace volte {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& raw, const std::string& field) {
  const std::string s = trim(raw);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ConfigError("expected a number, got '" + s + "'", field);
  }
  return v;
}

template <typename Int>
Int parse_int(const std::string& raw, const std::string& field) {
  const std::string s = trim(raw);
  Int v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ConfigError("expected an integer, got '" + s + "'", field);
  return v;
}

bool parse_bool(const std::string& raw, const std::string& field) {
  const std::string s = trim(raw);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ConfigError("expected true or false, got '" + s + "'", field);
}

std::vector<Arm> parse_arms(const std::string& raw, const std::string& field) {
  std::vector<Arm> arms;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const Arm a = parse_arm(trim(item));
    for (Arm existing : arms) {
      if (existing == a) throw ConfigError("duplicate arm '" + trim(item) + "'", field);
    }
    arms.push_back(a);
  }
  if (arms.empty()) throw ConfigError("at least one arm required", field);
  return arms;
}

// '#' comment lines are accepted in addition to the ';' lines the INI
// reader understands.
std::string strip_hash_comments(const std::string& text) {
  std::stringstream in(text);
  std::string out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (!t.empty() && t.front() == '#') continue;
    out += line;
    out += '\n';
  }
  return out;
}

struct Pending {
  std::optional<double> intensity;
  std::optional<double> neighbor_power;
  std::optional<double> noise_power;
  double noise_figure_db = 7.0;
  double prb_bandwidth_khz = 180.0;
};

using Setter = std::function<void(const std::string&, const std::string&)>;
using SectionTable = std::map<std::string, Setter>;

std::map<std::string, SectionTable> make_table(ExperimentConfig& c, Pending& pend) {
  auto num = [](double& dst) { return [&dst](const std::string& v, const std::string& f) { dst = parse_double(v, f); }; };
  auto integer = [](int& dst) { return [&dst](const std::string& v, const std::string& f) { dst = parse_int<int>(v, f); }; };

  auto& r = c.radio;
  auto& l = c.learning;
  auto& fa = c.faults;
  auto& m = c.metrics;
  auto& run = c.run;

  std::map<std::string, SectionTable> t;
  t["radio"] = {
      {"bandwidth_mhz", num(r.bandwidth_mhz)},
      {"carrier_ghz", [&](const std::string& v, const std::string& f) {
         r.path_loss.carrier_ghz = parse_double(v, f);
         r.budget.carrier_ghz = r.path_loss.carrier_ghz;
       }},
      {"n_prb", integer(r.budget.n_prb)},
      {"max_power_dbm", num(r.cluster.max_power_dbm)},
      {"initial_power_dbm", num(r.initial_power_dbm)},
      {"neighbor_power_dbm", [&](const std::string& v, const std::string& f) { pend.neighbor_power = parse_double(v, f); }},
      {"min_power_dbm", [&](const std::string& v, const std::string& f) { r.min_power_dbm = parse_double(v, f); }},
      {"antenna_gain_dbi", num(r.cluster.antenna_gain_dbi)},
      {"antenna_height_m", num(r.cluster.antenna_height_m)},
      {"ue_gain_dbi", num(r.ues.antenna_gain_dbi)},
      {"ue_height_m", num(r.ues.height_m)},
      {"side_length_m", num(r.cluster.side_length_m)},
      {"max_ues", integer(r.ues.max_ues)},
      {"intensity_per_m2", [&](const std::string& v, const std::string& f) { pend.intensity = parse_double(v, f); }},
      {"path_loss_model", [&](const std::string& v, const std::string&) { r.path_loss.kind = parse_path_loss_kind(trim(v)); }},
      {"path_loss_exponent", num(r.path_loss.exponent)},
      {"min_distance_m", num(r.path_loss.min_distance_m)},
      {"misc_loss_db", num(r.budget.misc_loss_db)},
      {"noise_figure_db", num(pend.noise_figure_db)},
      {"prb_bandwidth_khz", num(pend.prb_bandwidth_khz)},
      {"noise_power_dbm", [&](const std::string& v, const std::string& f) { pend.noise_power = parse_double(v, f); }},
      {"ici_policy", [&](const std::string& v, const std::string&) { r.ici_policy = parse_ici_policy(trim(v)); }},
  };
  t["learning"] = {
      {"episodes", integer(l.episodes)},
      {"ttis_per_episode", integer(l.ttis_per_episode)},
      {"discount", num(l.discount)},
      {"learning_rate", num(l.learning_rate)},
      {"epsilon", num(l.epsilon)},
      {"epsilon_min", num(l.epsilon_min)},
      {"epsilon_decay", num(l.epsilon_decay)},
      {"epsilon_schedule", [&](const std::string& v, const std::string&) { l.schedule = parse_epsilon_schedule(trim(v)); }},
      {"reward_min", num(l.reward_min)},
      {"reward_max", num(l.reward_max)},
      {"initial_sinr_db", num(l.initial_sinr_db)},
      {"target_sinr_db", num(l.target_sinr_db)},
      {"q_init", num(l.q_init)},
      {"persist_q", [&](const std::string& v, const std::string& f) { l.persist_q = parse_bool(v, f); }},
  };
  SectionTable faults{
      {"feeder_loss_db", num(fa.feeder_loss_db)},
      {"vswr_nominal", num(fa.vswr_nominal)},
      {"vswr_min", num(fa.vswr_draw_min)},
      {"vswr_max", num(fa.vswr_draw_max)},
  };
  for (std::size_t i = 0; i < fa.distribution.p.size(); ++i) {
    faults["p" + std::to_string(i)] = [&fa, i](const std::string& v, const std::string& f) {
      fa.distribution.p[i] = parse_probability(v, f);
    };
  }
  t["faults"] = std::move(faults);
  t["metrics"] = {
      {"min_sinr_db", num(m.min_sinr_db)},
      {"error_model", [&](const std::string& v, const std::string&) { m.error_model = parse_error_model(trim(v)); }},
      {"codec_kbps", num(m.packet.codec_kbps)},
      {"activity_factor", num(m.packet.activity_factor)},
      {"frame_ms", num(m.packet.frame_ms)},
      {"bits_per_symbol", integer(m.packet.bits_per_symbol)},
      {"mos_max", num(m.mos_curve.max_mos)},
      {"mos_steepness", num(m.mos_curve.steepness)},
  };
  t["run"] = {
      {"seed", [&](const std::string& v, const std::string& f) { run.seed = parse_int<std::uint64_t>(v, f); }},
      {"arms", [&](const std::string& v, const std::string& f) { run.arms = parse_arms(v, f); }},
      {"out", [&](const std::string& v, const std::string&) { run.out_dir = trim(v); }},
      {"trace", [&](const std::string& v, const std::string& f) {
         const std::string s = trim(v);
         if (s == "final") run.trace = TraceVerbosity::kFinal;
         else if (s == "all") run.trace = TraceVerbosity::kAll;
         else throw ConfigError("expected final or all, got '" + s + "'", f);
       }},
      {"replicas", integer(run.replicas)},
  };
  return t;
}

}  // namespace

double parse_probability(const std::string& raw, const std::string& field) {
  const std::string s = trim(raw);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return parse_double(s, field);
  const double num = parse_double(s.substr(0, slash), field);
  const double den = parse_double(s.substr(slash + 1), field);
  if (den == 0.0) throw ConfigError("zero denominator in '" + s + "'", field);
  return num / den;
}

void ExperimentConfig::validate() const {
  radio.validate();
  learning.validate();
  faults.validate();
  metrics.validate();
  if (run.replicas < 1) throw ConfigError("must be at least 1", "run.replicas");
  if (run.arms.empty()) throw ConfigError("at least one arm required", "run.arms");
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  Pending pend;
  const auto table = make_table(cfg, pend);

  boost::property_tree::ptree tree;
  try {
    std::istringstream in(strip_hash_comments(text));
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("parse error: ") + e.message() + " (line " + std::to_string(e.line()) + ")");
  }

  for (const auto& [section, body] : tree) {
    const auto sec = table.find(section);
    if (sec == table.end()) {
      if (!body.data().empty()) throw ConfigError("key outside of any section", section);
      throw ConfigError("unknown section", section);
    }
    for (const auto& [key, value] : body) {
      const std::string field = section + "." + key;
      const auto setter = sec->second.find(key);
      if (setter == sec->second.end()) throw ConfigError("unknown key", field);
      if (!value.empty()) throw ConfigError("nested values are not supported", field);
      setter->second(value.data(), field);
    }
  }

  auto& r = cfg.radio;
  r.ues.intensity_per_m2 = pend.intensity.value_or(static_cast<double>(r.ues.max_ues) /
                                                   (r.cluster.side_length_m * r.cluster.side_length_m));
  r.neighbor_power_dbm = pend.neighbor_power.value_or(r.initial_power_dbm);
  if (!(pend.prb_bandwidth_khz > 0.0)) throw ConfigError("must be positive", "radio.prb_bandwidth_khz");
  r.budget.noise_power_dbm = pend.noise_power.value_or(thermal_noise_dbm(pend.prb_bandwidth_khz * 1e3, pend.noise_figure_db));
  r.path_loss.tx_height_m = r.cluster.antenna_height_m;
  r.path_loss.rx_height_m = r.ues.height_m;

  cfg.sha256 = sha256_hex(text);
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

}  // namespace volte
