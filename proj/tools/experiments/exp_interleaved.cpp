#include <map>
#include <set>
#include <sstream>

#include "common.hpp"
#include "context.hpp"
#include "ldlab/interleaved_decode.hpp"
#include "oracles.hpp"

namespace ldlab::exp {

namespace {

json grid_json(const Grid& g) {
  json rows = json::array();
  for (std::size_t r = 0; r < g.rows(); ++r) rows.push_back(std::vector<int>(g.row(r).begin(), g.row(r).end()));
  return rows;
}

// Half the received grids are uniform, half are codewords with random row errors.
Grid sweep_received(const InterleavedCode& ic, std::uint64_t t, Rng& rng) {
  const Field& f = ic.base().field();
  if (t % 2 == 0) return random_grid(f, ic.length(), ic.m(), rng);
  const std::size_t errors = uniform_below(rng, ic.length());
  return corrupt_rows(f, random_codeword_grid(ic, rng), errors, rng);
}

}  // namespace

void run_interleaved_oracle(Context& ctx) {
  const std::uint64_t trials = ctx.trials_or(100);
  std::uint64_t index = 0;
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  std::size_t nonempty = 0;
  json groups = json::array();
  for (const auto& nc : interleaved_test_codes()) {
    for (std::size_t m = 1; m <= 3; ++m) {
      const InterleavedCode ic(nc.code, m);
      const std::size_t n = ic.length();
      const std::size_t d = ic.min_distance();
      std::size_t group_mismatch = 0;
      std::size_t max_list = 0;
      for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(ctx.seed_for(index++));
        const Grid received = sweep_received(ic, t, rng);
        for (std::size_t e = 0; e < d; ++e) {
          const Rational eta(static_cast<std::int64_t>(e), static_cast<std::int64_t>(n));
          const NaiveResult naive = decode_naive(ic, received, eta);
          const auto brute = oracle::interleaved_ball(nc.code, m, received, static_cast<std::int64_t>(e));
          ++instances;
          if (!brute.empty()) ++nonempty;
          max_list = std::max(max_list, brute.size());
          const bool equal = naive.list == brute;
          if (!equal) {
            ++mismatches;
            ++group_mismatch;
          }
          ctx.outcome({{"code", nc.name}, {"m", m}, {"trial", t}, {"eta", eta.str()}, {"decoder", naive.list.size()},
                       {"oracle", brute.size()}, {"received", grid_json(received)}},
                      equal);
        }
      }
      groups.push_back({{"code", nc.name}, {"m", m}, {"received_words", trials}, {"mismatches", group_mismatch},
                        {"max_list", max_list}});
    }
  }
  ctx.aggregate = {{"groups", groups}, {"instances", instances}, {"nonempty_balls", nonempty},
                   {"mismatches", mismatches}};
  ctx.verdict("set_equality", mismatches == 0);
}

void run_tree_leaf_bound(Context& ctx) {
  const std::uint64_t trials = ctx.trials_or(100);
  std::uint64_t index = 0;
  std::size_t trees = 0;
  std::size_t leaf_bound_failures = 0;
  std::size_t invariant_failures = 0;
  std::size_t leaf_set_failures = 0;
  std::size_t max_leaves = 0;
  double max_ratio = 0;
  json groups = json::array();
  for (const auto& nc : interleaved_test_codes()) {
    std::map<std::size_t, std::size_t> ell;  // radius -> measured max list size
    const std::size_t n = nc.code.length();
    const std::size_t d = nc.code.min_distance();
    for (std::size_t e = 1; e < d; ++e) ell[e] = oracle::max_list_size(nc.code, static_cast<std::int64_t>(e));
    for (std::size_t m = 1; m <= 3; ++m) {
      const InterleavedCode ic(nc.code, m);
      std::size_t group_trees = 0;
      std::size_t group_fail = 0;
      for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(ctx.seed_for(index++));
        const Grid received = sweep_received(ic, t, rng);
        for (std::size_t e = 1; e < d; ++e) {
          const Rational eta(static_cast<std::int64_t>(e), static_cast<std::int64_t>(n));
          const DecodeTree tree = erase_decode_tree(ic, received, eta);
          const TreeStats stats = tree_stats(tree);
          const InterleavedParams p = interleaved_params(nc.code.relative_distance(), eta);
          const TreeLeafBound bound =
              tree_leaf_bound(static_cast<std::uint64_t>(p.b), static_cast<std::uint64_t>(p.r), ell[e]);
          auto leaves = tree.leaf_labels();
          std::sort(leaves.begin(), leaves.end());
          const bool leaf_set_ok = leaves == oracle::interleaved_ball(nc.code, m, received, static_cast<std::int64_t>(e));
          const bool count_ok = stats.leaves_at_level_m <= bound.closed_form && bound.holds;
          const bool clean = stats.clean();
          ++trees;
          ++group_trees;
          max_leaves = std::max(max_leaves, stats.leaves_at_level_m);
          max_ratio = std::max(max_ratio, static_cast<double>(stats.leaves_at_level_m) /
                                              static_cast<double>(bound.closed_form));
          if (!count_ok) ++leaf_bound_failures;
          if (!clean) ++invariant_failures;
          if (!leaf_set_ok) ++leaf_set_failures;
          if (!count_ok || !clean || !leaf_set_ok) ++group_fail;
          ctx.outcome({{"code", nc.name}, {"m", m}, {"trial", t}, {"eta", eta.str()},
                        {"leaves", stats.leaves_at_level_m}, {"bound", bound.closed_form}, {"ell", ell[e]},
                        {"b", p.b}, {"r", p.r}, {"clean", clean}, {"leaf_set_ok", leaf_set_ok},
                        {"white_exclusivity", stats.white_exclusivity_violations.size()},
                        {"blue_degree", stats.blue_degree_violations.size()},
                        {"blue_path", stats.blue_path_violations.size()},
                        {"red_path", stats.red_path_violations.size()}, {"mu", stats.mu_violations.size()}},
                      count_ok && clean && leaf_set_ok);
        }
      }
      json ells = json::object();
      for (const auto& [e, l] : ell) ells[std::to_string(e)] = l;
      groups.push_back({{"code", nc.name}, {"m", m}, {"trees", group_trees}, {"failures", group_fail},
                        {"measured_list_size", ells}});
    }
  }
  ctx.aggregate = {{"groups", groups},
                   {"trees", trees},
                   {"max_leaves", max_leaves},
                   {"max_leaves_over_bound", max_ratio},
                   {"leaf_bound_failures", leaf_bound_failures},
                   {"invariant_failures", invariant_failures},
                   {"leaf_set_failures", leaf_set_failures}};
  ctx.verdict("leaf_count_bound", leaf_bound_failures == 0);
  ctx.verdict("color_invariants", invariant_failures == 0);
  ctx.verdict("leaves_equal_ball", leaf_set_failures == 0);
}

void run_interleave_witness(Context& ctx) {
  const auto max_m = static_cast<std::size_t>(ctx.integer("max_m", 4));
  const LinearCode code = hadamard(gf(2), static_cast<std::size_t>(ctx.integer("k", 2)));
  const std::size_t n = code.length();
  const std::size_t d = code.min_distance();
  bool all_ok = true;
  for (std::size_t m = 1; m <= max_m; ++m) {
    const InterleavedCode ic(code, m);
    const InterleaveWitness w = interleave_lower_witness(code, m);
    std::set<Grid> distinct(w.codewords.begin(), w.codewords.end());
    std::size_t within = 0;
    bool members = true;
    for (const Grid& g : distinct) {
      members = members && ic.contains(g);
      std::size_t bad = 0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < m; ++c)
          if (g(r, c) != w.received(r, c)) {
            ++bad;
            break;
          }
      if (bad <= d) ++within;
    }
    const bool ok = members && within >= (std::size_t{1} << m);
    all_ok = all_ok && ok;
    ctx.outcome({{"m", m}, {"codewords", distinct.size()}, {"within_delta", within}, {"required", 1u << m},
                 {"max_distance", w.max_distance.str()}, {"members", members}},
                ok);
  }
  ctx.aggregate = {{"code", code.tag()}, {"delta", code.relative_distance().str()}};
  ctx.verdict("at_least_2_pow_m", all_ok);
}

void run_list_size_sweep(Context& ctx) {
  const std::uint64_t trials = ctx.trials_or(50);
  std::ostringstream csv;
  csv << "family,errors,error_rate,trials,mean_list,max_list,recovery_rate\n";
  bool recovery_ok = true;
  std::uint64_t index = 0;
  json rows = json::array();

  const InterleavedCode ic(hadamard(gf(2), 3), 2);
  const Rational eta = ctx.rational("eta", Rational(3, 8));
  const std::int64_t budget = max_count_at_most(eta * Rational(static_cast<std::int64_t>(ic.length())));
  for (std::size_t e = 0; e <= ic.length(); ++e) {
    std::size_t total = 0, max_list = 0, recovered = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      Rng rng(ctx.seed_for(index++));
      const Grid planted = random_codeword_grid(ic, rng);
      const Grid received = corrupt_rows(ic.base().field(), planted, e, rng);
      const NaiveResult res = decode_naive(ic, received, eta);
      total += res.list.size();
      max_list = std::max(max_list, res.list.size());
      if (std::binary_search(res.list.begin(), res.list.end(), planted)) ++recovered;
    }
    const double rate = static_cast<double>(recovered) / static_cast<double>(trials);
    if (static_cast<std::int64_t>(e) <= budget && recovered != trials) recovery_ok = false;
    const double mean = static_cast<double>(total) / static_cast<double>(trials);
    csv << "Had(2,3)^2," << e << ',' << static_cast<double>(e) / static_cast<double>(ic.length()) << ',' << trials
        << ',' << mean << ',' << max_list << ',' << rate << '\n';
    rows.push_back({{"family", "Had(2,3)^2"}, {"errors", e}, {"mean_list", mean}, {"max_list", max_list},
                    {"recovery_rate", rate}});
  }

  const Rational eps = ctx.rational("eps", Rational(1, 8));
  const FieldPtr f2 = gf(2);
  const std::size_t k = 3, m = 2;
  const std::size_t n = std::size_t{1} << k;
  const std::int64_t lin_budget = max_count_at_most((Rational(1, 2) - eps) * Rational(static_cast<std::int64_t>(n)));
  for (std::size_t e = 0; e <= n; ++e) {
    std::size_t total = 0, max_list = 0, recovered = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      Rng rng(ctx.seed_for(index++));
      const LinTransform planted = random_transform(f2, k, m, rng);
      const ReceivedTable received = make_received(f2, k, corrupt_rows(*f2, planted.table(), e, rng));
      const FullDecodeResult res = decode_full(received, eps);
      total += res.result.list.size();
      max_list = std::max(max_list, res.result.list.size());
      for (const LinEntry& entry : res.result.list)
        if (entry.M == planted.M) ++recovered;
    }
    const double rate = static_cast<double>(recovered) / static_cast<double>(trials);
    if (static_cast<std::int64_t>(e) <= lin_budget && recovered != trials) recovery_ok = false;
    const double mean = static_cast<double>(total) / static_cast<double>(trials);
    csv << "Lin(F2,3,2)," << e << ',' << static_cast<double>(e) / static_cast<double>(n) << ',' << trials << ','
        << mean << ',' << max_list << ',' << rate << '\n';
    rows.push_back({{"family", "Lin(F2,3,2)"}, {"errors", e}, {"mean_list", mean}, {"max_list", max_list},
                    {"recovery_rate", rate}});
  }
  ctx.aggregate = {{"rows", rows}, {"interleaved_eta", eta.str()}, {"lintrans_eps", eps.str()}};
  ctx.csv = csv.str();
  ctx.verdict("recovery_within_radius", recovery_ok);
}

}  // namespace ldlab::exp
