#include "experiments.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

#include "context.hpp"
#include "ldlab/error.hpp"
#include "ldlab/io.hpp"

namespace ldlab::exp {

namespace {

struct Entry {
  ExperimentInfo info;
  ExperimentFn fn;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"interleaved_oracle", 1, "naive interleaved decoding equals the brute-force ball"}, run_interleaved_oracle},
      {{"tree_leaf_bound", 2, "erase-decode tree leaf count and edge-color invariants"}, run_tree_leaf_bound},
      {{"interleave_witness", 3, "2^m interleaved codewords within distance delta"}, run_interleave_witness},
      {{"tensor_planted", 4, "four-phase tensor decoding recovers a planted codeword"}, run_tensor_planted},
      {{"tensor_witness", 5, "c0 (x) r places a full list within delta*eta"}, run_tensor_witness},
      {{"ghw_hadamard", 6, "generalized Hamming weights and their lower bound"}, run_ghw_hadamard},
      {{"rank_weight", 7, "weight of a codeword grid versus its rank"}, run_rank_weight},
      {{"deletion_graph", 8, "independence-number bound on Lin(F2,3,3) balls"}, run_deletion_graph},
      {{"lintrans_decoders", 9, "rank-1 and rank-2 transform decoders against exhaustive balls"},
       run_lintrans_decoders},
      {{"erasure_lists", 10, "list sizes with erasures for Hadamard codes"}, run_erasure_lists},
      {{"serfling", 11, "sampling-without-replacement tail bound"}, run_serfling},
      {{"bound_analytics", 12, "Johnson radius and tensor recursion comparisons on grids"}, run_bound_analytics},
      {{"lintrans_full", 0, "full transform balls, rank-2 cross-check and q-ary shape"}, run_lintrans_full},
      {{"list_size_sweep", 0, "list size and recovery versus error rate (CSV)"}, run_list_size_sweep},
  };
  return entries;
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

Rational Context::rational(const std::string& key, const Rational& fallback) const {
  if (!spec.params.contains(key)) return fallback;
  const json& v = spec.params.at(key);
  try {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  } catch (const Error& e) {
    throw Error(Errc::kSpecInvalid, "parameter " + key + ": " + e.what());
  }
  throw Error(Errc::kSpecInvalid, "parameter " + key + " must be a \"p/q\" string or an integer");
}

std::int64_t Context::integer(const std::string& key, std::int64_t fallback) const {
  if (!spec.params.contains(key)) return fallback;
  const json& v = spec.params.at(key);
  if (!v.is_number_integer()) throw Error(Errc::kSpecInvalid, "parameter " + key + " must be an integer");
  return v.get<std::int64_t>();
}

ExperimentSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::kSpecInvalid, "spec must be a JSON object");
  ExperimentSpec s;
  try {
    s.name = j.at("name").get<std::string>();
    if (j.contains("params")) s.params = j.at("params");
    if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("trials")) s.trials = j.at("trials").get<std::uint64_t>();
    if (j.contains("out")) s.out = j.at("out").get<std::string>();
    if (j.contains("csv")) s.csv = j.at("csv").get<std::string>();
  } catch (const json::exception& e) {
    throw Error(Errc::kSpecInvalid, e.what());
  }
  if (!s.params.is_object()) throw Error(Errc::kSpecInvalid, "params must be an object");
  return s;
}

json spec_to_json(const ExperimentSpec& spec) {
  json j = {{"name", spec.name}, {"params", spec.params}, {"seed", spec.seed}, {"trials", spec.trials}};
  if (!spec.out.empty()) j["out"] = spec.out;
  if (!spec.csv.empty()) j["csv"] = spec.csv;
  return j;
}

const std::vector<ExperimentInfo>& experiment_list() {
  static const std::vector<ExperimentInfo> infos = [] {
    std::vector<ExperimentInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  const Entry* entry = nullptr;
  for (const auto& e : registry())
    if (e.info.name == spec.name) entry = &e;
  if (!entry) throw Error(Errc::kSpecInvalid, "unknown experiment '" + spec.name + "'");

  const std::string started = utc_now();
  const auto t0 = std::chrono::steady_clock::now();
  Context ctx(spec);
  try {
    entry->fn(ctx);
  } catch (const Error& e) {
    if (e.code() == Errc::kSpecInvalid) throw;
    ctx.aggregate["error"] = e.what();
    ctx.verdict("completed", false);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  ExperimentReport report;
  bool pass = !ctx.verdicts.empty();
  for (const auto& [name, v] : ctx.verdicts.items()) pass = pass && v == "PASS";
  report.pass = pass;
  report.seconds = seconds;
  report.csv = std::move(ctx.csv);
  report.doc = {
      {"experiment", spec.name},
      {"criterion", entry->info.criterion},
      {"inputs", spec_to_json(spec)},
      {"trials", std::move(ctx.trials)},
      {"trials_not_stored", ctx.dropped_trials},
      {"failed_trials", std::move(ctx.failures)},
      {"failed_trials_not_stored", ctx.dropped_failures},
      {"aggregate", std::move(ctx.aggregate)},
      {"verdicts", std::move(ctx.verdicts)},
      {"pass", pass},
      {"timestamp", {{"utc", started}, {"elapsed_seconds", seconds}}},
  };
  return report;
}

void write_outputs(const ExperimentSpec& spec, const ExperimentReport& report) {
  if (!spec.out.empty()) write_text_file(spec.out, report.doc.dump(2) + "\n");
  if (!spec.csv.empty()) write_text_file(spec.csv, report.csv);
}

}  // namespace ldlab::exp
