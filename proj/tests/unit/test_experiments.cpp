#include <gtest/gtest.h>

#include <set>

#include "experiments.hpp"
#include "ldlab/error.hpp"

using namespace ldlab;
using namespace ldlab::exp;

namespace {

json without_timestamp(json doc) {
  doc.erase("timestamp");
  return doc;
}

}  // namespace

TEST(Experiments, SpecRoundTrip) {
  ExperimentSpec spec;
  spec.name = "tree_leaf_bound";
  spec.params = {{"m", 3}};
  spec.seed = 9;
  spec.trials = 12;
  const ExperimentSpec back = spec_from_json(spec_to_json(spec));
  EXPECT_EQ(back.name, spec.name);
  EXPECT_EQ(back.params, spec.params);
  EXPECT_EQ(back.seed, 9u);
  EXPECT_EQ(back.trials, 12u);
}

TEST(Experiments, BadSpecs) {
  ExperimentSpec spec;
  spec.name = "no_such_experiment";
  try {
    run_experiment(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kSpecInvalid);
  }
  EXPECT_THROW(spec_from_json(json{{"seed", 1}}), Error);
  EXPECT_THROW(spec_from_json(json{{"name", 3}}), Error);
}

TEST(Experiments, ListIsUniqueAndCoversCriteria) {
  std::vector<int> seen(13, 0);
  std::set<std::string> names;
  for (const ExperimentInfo& e : experiment_list()) {
    EXPECT_TRUE(names.insert(e.name).second) << e.name;
    ASSERT_GE(e.criterion, 0);
    ASSERT_LE(e.criterion, 12);
    ++seen[static_cast<std::size_t>(e.criterion)];
  }
  for (int c = 1; c <= 12; ++c) EXPECT_GT(seen[static_cast<std::size_t>(c)], 0) << "criterion " << c;
}

TEST(Experiments, DeterministicApartFromTimestamp) {
  ExperimentSpec spec;
  spec.name = "interleave_witness";
  spec.seed = 5;
  const ExperimentReport a = run_experiment(spec);
  const ExperimentReport b = run_experiment(spec);
  EXPECT_EQ(without_timestamp(a.doc), without_timestamp(b.doc));
  EXPECT_TRUE(a.doc.contains("timestamp"));
}

TEST(Experiments, SmallRunsPassWithCompleteReports) {
  for (const char* name : {"interleave_witness", "ghw_hadamard", "tree_leaf_bound"}) {
    ExperimentSpec spec;
    spec.name = name;
    spec.trials = 20;
    const ExperimentReport r = run_experiment(spec);
    EXPECT_TRUE(r.pass) << name;
    for (const char* key : {"experiment", "criterion", "inputs", "trials", "aggregate", "verdicts", "pass", "timestamp"})
      EXPECT_TRUE(r.doc.contains(key)) << name << " " << key;
    bool all = true;
    for (const auto& [k, v] : r.doc["verdicts"].items()) all = all && v == "PASS";
    EXPECT_EQ(all, r.pass) << name;
  }
}
