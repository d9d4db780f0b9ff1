// volte-sim: run the FPA / Q-learning power-control experiment.
//
//   volte-sim simulate --config <path> --seed <u64> --arms fpa,qlearn --out <dir> [--episodes N] [--quiet]
//   volte-sim validate --config <path>
//
// Exit codes: 0 success, 2 configuration error, 3 runtime error.
// Log level comes from SPDLOG_LEVEL (e.g. SPDLOG_LEVEL=debug).

#include <spdlog/cfg/env.h>
#include <spdlog/spdlog.h>

#include <cstdio>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "volte/config.hpp"
#include "volte/error.hpp"
#include "volte/experiment.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

std::vector<volte::Arm> parse_arm_list(const std::string& text) {
  std::vector<volte::Arm> arms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const volte::Arm arm = volte::parse_arm(item);
    for (auto a : arms) {
      if (a == arm) throw volte::ConfigError("duplicate arm '" + item + "'", "--arms");
    }
    arms.push_back(arm);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return arms;
}

}  // namespace

int main(int argc, char** argv) {
  spdlog::set_level(spdlog::level::info);
  spdlog::cfg::load_env_levels();
  spdlog::set_pattern("[%l] %v");

  CLI::App app{"Q-learning VoLTE downlink power control simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string arms;
  std::string out_dir;
  std::optional<int> episodes;
  bool quiet = false;

  auto* simulate = app.add_subcommand("simulate", "run the experiment and write traces/metrics");
  simulate->add_option("--config", config_path, "experiment config file")->required();
  simulate->add_option("--seed", seed, "master seed (overrides run.seed)");
  simulate->add_option("--arms", arms, "comma-separated arms: fpa,qlearn");
  simulate->add_option("--out", out_dir, "output directory (overrides run.out)");
  simulate->add_option("--episodes", episodes, "number of episodes (overrides learning.episodes)");
  simulate->add_flag("--quiet", quiet, "suppress the summary table");

  auto* validate = app.add_subcommand("validate", "load and validate a config file");
  validate->add_option("--config", config_path, "experiment config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  volte::ExperimentConfig config;
  try {
    config = volte::load_config(config_path);
    if (seed) config.run.seed = *seed;
    if (!arms.empty()) config.run.arms = parse_arm_list(arms);
    if (!out_dir.empty()) config.run.out_dir = out_dir;
    if (episodes) config.learning.episodes = *episodes;
    config.validate();
  } catch (const volte::ConfigError& e) {
    spdlog::error("config error: {}", e.what());
    return kExitConfig;
  }

  if (*validate) {
    std::cout << "ok " << config.sha256 << '\n';
    return 0;
  }

  try {
    spdlog::debug("running {} episodes x {} TTIs, seed {}", config.learning.episodes,
                  config.learning.ttis_per_episode, config.run.seed);
    auto result = volte::run_all(config);
    volte::write_outputs(config, result, config.run.out_dir);
    if (!quiet) {
      std::printf("%-8s %14s %8s %10s %10s\n", "arm", "retainability", "mos", "ttis", "wall_s");
      for (const auto& s : result.summaries) {
        std::printf("%-8s %13.2f%% %8.4f %10ld %10.3f\n", std::string(volte::to_string(s.arm)).c_str(),
                    100.0 * s.retainability, s.mos, s.total_ttis, s.wall_clock_s);
      }
      for (const auto& a : result.aggregates) {
        std::printf("%-8s mean over %zu seeds: retainability %.2f%%, mos %.4f\n",
                    std::string(volte::to_string(a.arm)).c_str(), a.seeds.size(), 100.0 * a.mean_retainability,
                    a.mean_mos);
      }
      std::printf("outputs: %s (config sha256 %s)\n", config.run.out_dir.string().c_str(), config.sha256.c_str());
    }
  } catch (const volte::ConfigError& e) {
    spdlog::error("config error: {}", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    spdlog::error("runtime error: {}", e.what());
    return kExitRuntime;
  }
  return 0;
}
