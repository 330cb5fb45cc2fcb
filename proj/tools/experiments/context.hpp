#pragma once

#include <string>

#include "experiments.hpp"
#include "ldlab/rational.hpp"
#include "ldlab/rng.hpp"

namespace ldlab::exp {

/// Collects one experiment's output. Trial records past `kMaxTrialRecords`
/// are counted but not stored.
struct Context {
  static constexpr std::size_t kMaxTrialRecords = 200;

  const ExperimentSpec& spec;
  json trials = json::array();
  std::size_t dropped_trials = 0;
  json failures = json::array();
  std::size_t dropped_failures = 0;
  json aggregate = json::object();
  json verdicts = json::object();
  std::string csv;

  explicit Context(const ExperimentSpec& s) : spec(s) {}

  void verdict(const std::string& name, bool ok) { verdicts[name] = ok ? "PASS" : "FAIL"; }
  void record(json trial) {
    if (trials.size() < kMaxTrialRecords)
      trials.push_back(std::move(trial));
    else
      ++dropped_trials;
  }
  /// Records a trial with its outcome; failing trials are also kept in a
  /// separate list so they survive the cap on stored trials.
  void outcome(json trial, bool ok) {
    trial["ok"] = ok;
    if (!ok) {
      if (failures.size() < kMaxTrialRecords)
        failures.push_back(trial);
      else
        ++dropped_failures;
    }
    record(std::move(trial));
  }
  std::uint64_t trials_or(std::uint64_t fallback) const { return spec.trials ? spec.trials : fallback; }
  std::uint64_t seed_for(std::uint64_t index) const { return derive_seed(spec.seed, index); }
  Rational rational(const std::string& key, const Rational& fallback) const;
  std::int64_t integer(const std::string& key, std::int64_t fallback) const;
};

using ExperimentFn = void (*)(Context&);

void run_interleaved_oracle(Context& ctx);
void run_tree_leaf_bound(Context& ctx);
void run_interleave_witness(Context& ctx);
void run_tensor_planted(Context& ctx);
void run_tensor_witness(Context& ctx);
void run_ghw_hadamard(Context& ctx);
void run_rank_weight(Context& ctx);
void run_deletion_graph(Context& ctx);
void run_lintrans_decoders(Context& ctx);
void run_erasure_lists(Context& ctx);
void run_serfling(Context& ctx);
void run_bound_analytics(Context& ctx);
void run_lintrans_full(Context& ctx);
void run_list_size_sweep(Context& ctx);

}  // namespace ldlab::exp
