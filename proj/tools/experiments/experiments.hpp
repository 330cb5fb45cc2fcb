#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace ldlab::exp {

using json = nlohmann::json;

/// A named experiment with its inputs. `params` overrides per-experiment
/// defaults; trials = 0 keeps the default trial count.
struct ExperimentSpec {
  std::string name;
  json params = json::object();
  std::uint64_t seed = 1;
  std::uint64_t trials = 0;
  std::string out;  // report path, empty for none
  std::string csv;  // optional CSV export path
};

/// Throws SpecInvalid on missing or mistyped fields.
ExperimentSpec spec_from_json(const json& j);
json spec_to_json(const ExperimentSpec& spec);

struct ExperimentInfo {
  std::string name;
  int criterion = 0;  // acceptance criterion, 0 for supplementary runs
  std::string summary;
};

const std::vector<ExperimentInfo>& experiment_list();

struct ExperimentReport {
  json doc;  // inputs, trials, aggregate, verdicts, timestamp
  bool pass = false;
  std::string csv;
  double seconds = 0;
};

/// Runs one experiment. Unknown names throw SpecInvalid. Per-trial library
/// errors are recorded in the report rather than thrown.
ExperimentReport run_experiment(const ExperimentSpec& spec);

/// Writes the report (and CSV when requested) to the paths in the spec.
void write_outputs(const ExperimentSpec& spec, const ExperimentReport& report);

}  // namespace ldlab::exp
