// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "volte/config.hpp"
#include "volte/episode.hpp"
#include "volte/experiment.hpp"
#include "volte/faults.hpp"
#include "volte/metrics.hpp"
#include "volte/power_control.hpp"
#include "volte/qlearn.hpp"

using namespace volte;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(const char* name, bool ok, const std::string& detail) {
  std::printf("%s  %-32s %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

constexpr int kSeeds = 20;

const char* kNoFaults = "[faults]\np0 = 1\np1 = 0\np2 = 0\np3 = 0\np4 = 0\np5 = 0\np6 = 0\n";

void retainability_ordering() {
  const ExperimentConfig cfg = parse_config("");
  const auto t0 = std::chrono::steady_clock::now();
  const ArmAggregate fpa = run_replicas(cfg, Arm::kFpa, 1, kSeeds);
  const ArmAggregate ql = run_replicas(cfg, Arm::kQlearn, 1, kSeeds);
  const double elapsed = seconds_since(t0);
  const double gap_pp = 100.0 * (ql.mean_retainability - fpa.mean_retainability);
  report("retainability_gap", gap_pp >= 10.0,
         fmt("mean over %.0f seeds: fpa=%.2f%% qlearn=%.2f%% gap=%.2fpp", kSeeds, 100 * fpa.mean_retainability,
             100 * ql.mean_retainability, gap_pp));

  const double f1 = 100.0 * fpa.retainability.front();
  const double q1 = 100.0 * ql.retainability.front();
  const bool in_window = std::abs(f1 - 55.00) <= 15.0 && std::abs(q1 - 78.75) <= 15.0;
  report("retainability_single_seed", in_window,
         fmt("seed 1: fpa=%.2f%% (55.00+-15) qlearn=%.2f%% (78.75+-15)", f1, q1));
  report("retainability_runtime", elapsed < 30.0, fmt("%.2f s for both arms x %.0f seeds (< 30 s)", elapsed, kSeeds));

  const bool mos_ok = ql.mean_mos > fpa.mean_mos;
  report("mos_ordering", mos_ok, fmt("mean over %.0f seeds: fpa=%.4f qlearn=%.4f", kSeeds, fpa.mean_mos, ql.mean_mos));
}

void fault_free_controllability() {
  const ExperimentConfig cfg = parse_config(kNoFaults);
  const ArmRun ql = run_arm(cfg, Arm::kQlearn, cfg.run.seed);
  const double hit = target_hit_rate(ql, 100);
  report("fault_free_qlearn_target", hit >= 0.95, fmt("target met in %.1f%% of final-100 episodes (>= 95%%)", 100 * hit));

  bool exact = true;
  long ttis = 0;
  ExperimentConfig all = cfg;
  all.run.trace = TraceVerbosity::kAll;
  const ArmRun fpa = run_arm(all, Arm::kFpa, cfg.run.seed);
  for (const auto& ep : fpa.kept) {
    for (const auto& rec : ep.trace) {
      exact = exact && rec.sinr_db == 4.0;
      ++ttis;
    }
  }
  report("fault_free_fpa_constant", exact && ttis == 707L * 20, fmt("%.0f TTIs all at exactly 4 dB", double(ttis)));
}

void fpa_constant() {
  const double p = fpa_power(33.0, 100);
  report("fpa_power_constant", p == 13.0, fmt("fpa_power(33, 100) = %.17g", p));
}

void property_q_fixed_point() {
  QTable q = QTable::Zero();
  for (int i = 0; i < 400000; ++i) q_update(q, 0, 0, 1.0, 0, 0.001, 0.95);
  const double err = std::abs(q(0, 0) - 20.0);
  report("prop_q_fixed_point", err < 1e-6, fmt("|Q - 20| = %.3g", err));
}

void property_epsilon() {
  const ExperimentConfig cfg = parse_config("");
  LearningParams p = cfg.learning;
  double eps = p.epsilon;
  bool ok = true;
  for (int k = 0; k < 100000; ++k) {
    const double next = decay_epsilon(eps, p.epsilon_decay, p.epsilon_min);
    ok = ok && next <= eps && next >= p.epsilon_min;
    eps = next;
  }
  const ArmRun run = run_arm(cfg, Arm::kQlearn, 1);
  ok = ok && run.final_epsilon >= p.epsilon_min;
  report("prop_epsilon_floor", ok, fmt("final epsilon %.4g, floor %.4g", eps, p.epsilon_min));
}

void property_power_clamp() {
  RandomStream rng = master_stream(7).split("fuzz");
  bool ok = true;
  double max_seen = -1e9;
  for (int seq = 0; seq < 1000000 && ok; ++seq) {
    PowerSetting power;
    for (int t = 0; t < 20; ++t) {
      power = apply_pc_action(PcAction{static_cast<int>(rng.uniform_index(5))}, power).power;
      ok = ok && power.tx_dbm <= 33.0;
      max_seen = std::max(max_seen, power.tx_dbm);
    }
  }
  report("prop_tx_power_clamp", ok, fmt("1e6 sequences x 20 steps, max P_TX %.1f dBm", max_seen));
}

void property_fault_legality() {
  const FaultConfig cfg;
  RandomStream rng = master_stream(11).split("legality");
  FaultRegister reg = FaultRegister::cleared(cfg.vswr_nominal);
  bool ok = true;
  for (int i = 0; i < 1000000 && ok; ++i) {
    const NetworkAction a = sample_action(reg, cfg.distribution, rng);
    const double v = draw_vswr(cfg, rng);
    ok = is_legal(a, reg);
    if (ok) reg = apply_action(a, reg, cfg, v);
  }
  report("prop_fault_legality", ok, "1e6 sampled steps, every action legal");
}

void property_reversal() {
  const FaultConfig cfg;
  const FaultRegister base = FaultRegister::cleared(cfg.vswr_nominal);
  const std::pair<NetworkAction, NetworkAction> pairs[] = {
      {NetworkAction::kFeederFault, NetworkAction::kFeederCleared},
      {NetworkAction::kNeighborDown, NetworkAction::kNeighborUp},
      {NetworkAction::kVswrOut, NetworkAction::kVswrBack}};
  LinkBudgetParams budget;
  bool ok = true;
  for (const auto& [raise, clear] : pairs) {
    const FaultRegister r = apply_action(clear, apply_action(raise, base, cfg, 2.5), cfg);
    ok = ok && r == base && faulted_budget(budget, r).misc_loss_db == budget.misc_loss_db;
  }
  report("prop_fault_reversal", ok, "raise then clear restores register and budget for all three classes");
}

void property_bound_dominance() {
  RandomStream rng = master_stream(13).split("bound");
  bool ok = true;
  const double pmax_mw = dbm_to_mw(33.0);
  const double noise_mw = dbm_to_mw(-114.44727494896694);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t cells = 3 + rng.uniform_index(8);
    const double p0 = dbm_to_mw(rng.uniform(-120.0, 0.0));
    double interference = 0.0;
    // One neighbor is down; the rest interfere at or below max power.
    for (std::size_t j = 0; j + 2 < cells; ++j) interference += rng.uniform() * dbm_to_mw(rng.uniform(-40.0, 33.0));
    const double exact = p0 / (noise_mw + interference);
    ok = ok && neighbor_down_sinr_bound(p0, noise_mw, cells, pmax_mw) <= exact;
  }
  report("prop_neighbor_bound", ok, "bound <= exact SINR on 1000 random instances");
}

void property_metrics() {
  RandomStream rng = master_stream(17).split("metrics");
  const MetricsConfig mc;
  bool ok = true;
  for (int i = 0; i < 2000 && ok; ++i) {
    std::vector<double> b(1 + rng.uniform_index(20));
    std::vector<double> a(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) {
      b[k] = rng.uniform(-20.0, 20.0);
      a[k] = b[k] + rng.uniform(0.0, 5.0);
    }
    const VoiceQuality qa = evaluate_voice_quality(a, 20, mc);
    const VoiceQuality qb = evaluate_voice_quality(b, 20, mc);
    ok = ok && qb.retainability >= 0 && qb.retainability <= 1 && qb.mean_per >= 0 && qb.mean_per <= 1;
    ok = ok && qb.mos >= 1.0 && qb.mos <= 4.5;
    ok = ok && qa.retainability >= qb.retainability && qa.mean_per <= qb.mean_per && qa.mos >= qb.mos;
  }
  double prev = 2.0;
  for (int i = 0; i <= 1000 && ok; ++i) {
    const double per = packet_error_rate(qpsk_ser(std::pow(10.0, (-20.0 + 0.04 * i) / 10.0)), 167);
    ok = per <= prev && per >= 0.0 && per <= 1.0;
    prev = per;
  }
  ok = ok && mos(0.0) == 4.5 && mos(1.0) == 1.0;
  report("prop_metrics", ok, "range and monotonicity of retainability, PER and MOS");
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void property_determinism() {
  const ExperimentConfig cfg = parse_config("");
  const fs::path base = fs::temp_directory_path() / "volte_acceptance_det";
  fs::remove_all(base);
  for (const char* run : {"a", "b"}) {
    ExperimentResult r;
    for (Arm arm : cfg.run.arms) {
      ArmRun ar;
      r.summaries.push_back(run_experiment(cfg, arm, &ar));
      r.runs.push_back(std::move(ar));
    }
    write_outputs(cfg, r, base / run);
  }
  bool ok = true;
  for (const char* f : {"trace_fpa.csv", "trace_qlearn.csv"}) {
    const std::string a = slurp(base / "a" / f);
    ok = ok && !a.empty() && a == slurp(base / "b" / f);
  }
  fs::remove_all(base);
  report("prop_determinism", ok, "two runs give byte-identical traces");
}

void scale_check() {
  const ExperimentConfig cfg = parse_config("");
  const auto t0 = std::chrono::steady_clock::now();
  long ttis = 0;
  for (Arm arm : cfg.run.arms) ttis += run_arm(cfg, arm, cfg.run.seed).total_ttis;
  const double elapsed = seconds_since(t0);
  report("scale_check", elapsed < 5.0, fmt("707 episodes, both arms, %.0f TTIs in %.3f s (< 5 s)", double(ttis), elapsed));
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  try {
    retainability_ordering();
    fault_free_controllability();
    fpa_constant();
    property_q_fixed_point();
    property_epsilon();
    property_power_clamp();
    property_fault_legality();
    property_reversal();
    property_bound_dominance();
    property_metrics();
    property_determinism();
    scale_check();
  } catch (const std::exception& e) {
    report("unexpected_exception", false, e.what());
  }
  std::printf("%s  %d failure(s), %.2f s\n", failures == 0 ? "ALL PASS" : "FAILED", failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
