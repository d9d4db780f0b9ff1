#include "volte/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "volte/power_control.hpp"
#include "volte/radio.hpp"

namespace volte {

namespace {

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void write_atomic(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw std::runtime_error("cannot rename '" + tmp.string() + "' to '" + path.string() + "': " + ec.message());
}

double mean(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

std::vector<double> sinr_series(const EpisodeResult& ep) {
  std::vector<double> out;
  out.reserve(ep.trace.size());
  for (const auto& rec : ep.trace) out.push_back(rec.sinr_db);
  return out;
}

const ArmRun* find_run(const ExperimentResult& result, Arm arm) {
  for (const auto& r : result.runs) {
    if (r.arm == arm) return &r;
  }
  return nullptr;
}

}  // namespace

ArmRun run_arm(const ExperimentConfig& config, Arm arm, std::uint64_t seed) {
  const ClusterLayout layout = generate_cluster(config.radio.cluster);
  const LearningParams& lp = config.learning;
  const RandomStream arm_stream = master_stream(seed).split(to_string(arm));

  EpisodeSetup setup;
  setup.faults = &config.faults;
  setup.initial_power_dbm = config.radio.initial_power_dbm;
  setup.max_power_dbm = config.radio.cluster.max_power_dbm;
  setup.min_power_dbm = config.radio.min_power_dbm;
  setup.fpa_power_dbm = fpa_power(config.radio.cluster.max_power_dbm, config.radio.budget.n_prb);

  ArmRun run;
  run.arm = arm;
  run.seed = seed;
  run.statuses.reserve(static_cast<std::size_t>(lp.episodes));
  Agent agent(lp);

  for (int z = 1; z <= lp.episodes; ++z) {
    const auto ez = static_cast<std::uint64_t>(z);
    EpisodeEnvironment env(config.radio, layout, lp.initial_sinr_db, arm_stream.split("placement", ez),
                           arm_stream.split("ici", ez));
    EpisodeStreams streams{arm_stream.split("faults", ez), arm_stream.split("exploration", ez)};

    EpisodeResult ep = arm == Arm::kQlearn ? run_episode(env, agent, setup, z, streams)
                                           : run_fpa_episode(env, lp, setup, z, streams);
    run.total_ttis += static_cast<long>(ep.trace.size());
    run.statuses.push_back(ep.status);
    if (z == lp.episodes) {
      run.final_episode = ep;
    }
    if (config.run.trace == TraceVerbosity::kAll || z == lp.episodes) run.kept.push_back(std::move(ep));
  }

  run.q = agent.q;
  run.final_epsilon = agent.epsilon;
  const auto series = sinr_series(run.final_episode);
  run.quality = evaluate_voice_quality(series, lp.ttis_per_episode, config.metrics);
  return run;
}

double target_hit_rate(const ArmRun& run, int window) {
  const auto n = static_cast<int>(run.statuses.size());
  const int start = std::max(0, n - window);
  if (n == start) return 0.0;
  int hits = 0;
  for (int i = start; i < n; ++i) hits += run.statuses[static_cast<std::size_t>(i)] == TerminalStatus::kTargetMet;
  return static_cast<double>(hits) / static_cast<double>(n - start);
}

RunSummary run_experiment(const ExperimentConfig& config, Arm arm, ArmRun* run_out) {
  const auto start = std::chrono::steady_clock::now();
  ArmRun run = run_arm(config, arm, config.run.seed);
  const auto stop = std::chrono::steady_clock::now();

  RunSummary s;
  s.arm = arm;
  s.retainability = run.quality.retainability;
  s.mos = run.quality.mos;
  s.trace_path = config.run.out_dir / ("trace_" + std::string(to_string(arm)) + ".csv");
  s.total_ttis = run.total_ttis;
  s.wall_clock_s = std::chrono::duration<double>(stop - start).count();
  s.config_sha256 = config.sha256;
  s.seed = config.run.seed;
  if (run_out) *run_out = std::move(run);
  return s;
}

ArmAggregate run_replicas(const ExperimentConfig& config, Arm arm, std::uint64_t first_seed, int replicas) {
  ArmAggregate agg;
  agg.arm = arm;
  for (int i = 0; i < replicas; ++i) {
    const std::uint64_t seed = first_seed + static_cast<std::uint64_t>(i);
    const ArmRun run = run_arm(config, arm, seed);
    agg.seeds.push_back(seed);
    agg.retainability.push_back(run.quality.retainability);
    agg.mos.push_back(run.quality.mos);
  }
  agg.mean_retainability = mean(agg.retainability);
  agg.mean_mos = mean(agg.mos);
  return agg;
}

ExperimentResult run_all(const ExperimentConfig& config) {
  ExperimentResult result;
  for (Arm arm : config.run.arms) {
    ArmRun run;
    result.summaries.push_back(run_experiment(config, arm, &run));
    result.runs.push_back(std::move(run));
    result.aggregates.push_back(run_replicas(config, arm, config.run.seed, config.run.replicas));
  }
  return result;
}

std::vector<std::filesystem::path> write_outputs(const ExperimentConfig& config, ExperimentResult& result,
                                                 const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory '" + out_dir.string() + "': " + ec.message());

  const std::string hash_line = "# config_sha256=" + config.sha256 + "\n";
  std::vector<std::filesystem::path> written;

  for (std::size_t k = 0; k < result.runs.size(); ++k) {
    const ArmRun& run = result.runs[k];
    std::ostringstream csv;
    csv << hash_line << kTraceHeader << '\n';
    for (const auto& ep : run.kept) {
      for (const auto& r : ep.trace) {
        csv << r.episode << ',' << r.t << ',' << r.state << ',' << r.action << ',' << r.command << ','
            << r.repetitions << ',' << fmt_double(r.tx_dbm) << ',' << fmt_double(r.sinr_db) << ','
            << r.network_action << ',' << static_cast<int>(r.register_bits) << ',' << fmt_double(r.reward) << '\n';
      }
    }
    const auto path = out_dir / ("trace_" + std::string(to_string(run.arm)) + ".csv");
    write_atomic(path, csv.str());
    written.push_back(path);
    result.summaries[k].trace_path = path;
  }

  const double target = config.learning.target_sinr_db;
  const double floor = config.metrics.min_sinr_db;
  std::ostringstream pc, sinr, mos_csv;
  pc << hash_line << kPcSequenceHeader << '\n';
  sinr << hash_line << kSinrTimelineHeader << '\n';
  mos_csv << hash_line << kMosHeader << '\n';
  for (Arm arm : {Arm::kFpa, Arm::kQlearn}) {
    const ArmRun* run = find_run(result, arm);
    if (!run) continue;
    const auto name = to_string(arm);
    for (const auto& r : run->final_episode.trace) {
      pc << name << ',' << r.t << ',' << r.action << ',' << r.command << ',' << r.repetitions << ','
         << r.command * r.repetitions << '\n';
      sinr << name << ',' << r.t << ',' << fmt_double(r.sinr_db) << ',' << fmt_double(target) << ','
           << fmt_double(floor) << '\n';
    }
    mos_csv << name << ',' << fmt_double(run->quality.retainability) << ',' << fmt_double(run->quality.mean_per)
            << ',' << fmt_double(run->quality.mos) << '\n';
  }
  for (const auto& [file, body] : {std::pair{"fig_pc_sequence.csv", pc.str()},
                                   std::pair{"fig_sinr_timeline.csv", sinr.str()},
                                   std::pair{"fig_mos.csv", mos_csv.str()}}) {
    write_atomic(out_dir / file, body);
    written.push_back(out_dir / file);
  }

  nlohmann::ordered_json j;
  j["config_sha256"] = config.sha256;
  j["seed"] = config.run.seed;
  j["episodes"] = config.learning.episodes;
  j["tau"] = config.learning.ttis_per_episode;
  j["target_sinr_db"] = target;
  j["min_sinr_db"] = floor;
  j["symbols_per_packet"] = config.metrics.packet.symbols_per_packet();
  for (std::size_t k = 0; k < result.runs.size(); ++k) {
    const ArmRun& run = result.runs[k];
    auto& a = j["arms"][std::string(to_string(run.arm))];
    a["retainability"] = run.quality.retainability;
    a["mean_per"] = run.quality.mean_per;
    a["mos"] = run.quality.mos;
    a["per_series"] = run.quality.per;
    a["final_episode_length"] = run.final_episode.trace.size();
    a["terminal_status"] = std::string(to_string(run.final_episode.status));
    a["total_ttis"] = run.total_ttis;
    a["target_hit_rate_last100"] = target_hit_rate(run, 100);
    a["trace_path"] = result.summaries[k].trace_path.filename().string();
  }
  for (const auto& agg : result.aggregates) {
    auto& a = j["aggregate"][std::string(to_string(agg.arm))];
    a["seeds"] = agg.seeds;
    a["retainability"] = agg.retainability;
    a["mos"] = agg.mos;
    a["mean_retainability"] = agg.mean_retainability;
    a["mean_mos"] = agg.mean_mos;
  }
  write_atomic(out_dir / "metrics.json", j.dump(2) + "\n");
  written.push_back(out_dir / "metrics.json");
  return written;
}

}  // namespace volte
