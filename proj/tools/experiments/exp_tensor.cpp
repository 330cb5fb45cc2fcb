#include <cmath>
#include <optional>
#include <set>

#include "common.hpp"
#include "context.hpp"
#include "ldlab/error.hpp"
#include "ldlab/tensor_decode.hpp"
#include "oracles.hpp"

namespace ldlab::exp {

namespace {

std::size_t cell_errors(const Grid& a, const Grid& b) {
  std::size_t e = 0;
  for (std::size_t i = 0; i < a.flat().size(); ++i)
    if (a.flat()[i] != b.flat()[i]) ++e;
  return e;
}

struct PlantedBlock {
  std::uint64_t trials = 0;
  std::uint64_t recovered = 0;
  std::uint64_t unsound = 0;
  std::uint64_t implication_failures = 0;
  std::uint64_t errors_planted = 0;
  std::uint64_t failures = 0;  // library errors
  std::size_t max_list = 0;
  double predicted = 0;
  SampleSizes sizes;
  std::string target;
};

PlantedBlock planted_block(Context& ctx, const LinearCode& c1, const LinearCode& c2, const Rational& eta1,
                           const Rational& eta2, const Rational& eps, std::uint64_t trials, std::uint64_t stream,
                           std::optional<std::size_t> sample_override = std::nullopt) {
  PlantedBlock out;
  out.trials = trials;
  const Field& f = c1.field();
  const LinearCode product = tensor(c2, c1);
  const std::size_t n1 = c1.length();
  const std::size_t n2 = c2.length();
  const Rational d1 = c1.relative_distance();
  const Rational d2 = c2.relative_distance();
  const Rational target = min(eta1 * d2, eta2 * d1) - Rational(3) * eps;
  out.target = target.str();
  const std::int64_t budget = max_count_at_most(target * Rational(static_cast<std::int64_t>(n1 * n2)));
  out.errors_planted = static_cast<std::uint64_t>(std::max<std::int64_t>(budget, 0));
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(ctx.seed_for(stream * 1000003 + t));
    const Grid planted = as_tensor_grid(random_codeword(product, rng), n2, n1);
    const Grid received = corrupt_cells(f, planted, out.errors_planted, rng);
    TensorDecodeOptions opt;
    opt.eta1 = eta1;
    opt.eta2 = eta2;
    opt.eps = eps;
    opt.m1_override = sample_override;
    opt.m2_override = sample_override;
    opt.seed = rng();
    opt.mode = AdviceMode::kPlanted;
    opt.planted = planted;
    try {
      const TensorDecodeResult res = tensor_decode(c1, c2, received, opt);
      out.sizes = res.sizes;
      out.max_list = std::max(out.max_list, res.list.size());
      const bool found = std::binary_search(res.list.begin(), res.list.end(), planted);
      if (found) ++out.recovered;
      bool sound = true;
      for (const Grid& g : res.list)
        sound = sound && is_tensor_codeword(c2, c1, g) &&
                static_cast<std::int64_t>(cell_errors(g, received)) <= budget;
      if (!sound) ++out.unsound;
      bool implication = true;
      if (res.planted_state) implication = phase_diagnostics(*res.planted_state, planted, d1, d2, eps).implication_holds;
      if (!implication) ++out.implication_failures;
      ctx.outcome({{"eps", eps.str()}, {"trial", t}, {"sound", sound}, {"implication", implication},
                   {"recovered", found}, {"list", res.list.size()}},
                  sound && implication);
    } catch (const Error& e) {
      ++out.failures;
      ctx.outcome({{"eps", eps.str()}, {"trial", t}, {"error", e.what()}}, false);
    }
  }
  const double ell1 = static_cast<double>(oracle::max_list_size(c1, max_count_at_most(eta1 * Rational(static_cast<std::int64_t>(n1)))));
  const double ell2 = static_cast<double>(oracle::max_list_size(c2, max_count_at_most(eta2 * Rational(static_cast<std::int64_t>(n2)))));
  out.predicted = predicted_success(out.sizes, d1.to_double(), ell1, ell2, eps.to_double());
  return out;
}

json block_json(const PlantedBlock& b, double floor) {
  return {{"trials", b.trials},
          {"target_rate", b.target},
          {"errors_planted", b.errors_planted},
          {"recovered", b.recovered},
          {"frequency", static_cast<double>(b.recovered) / static_cast<double>(b.trials)},
          {"required_frequency", floor},
          {"unsound_runs", b.unsound},
          {"phase_implication_failures", b.implication_failures},
          {"library_errors", b.failures},
          {"max_list", b.max_list},
          {"sample_sizes", {{"m1", b.sizes.m1}, {"m2", b.sizes.m2}, {"m1_real", b.sizes.m1_real},
                            {"m2_real", b.sizes.m2_real}, {"capped1", b.sizes.capped1}, {"capped2", b.sizes.capped2}}},
          {"predicted_success_lower_bound", b.predicted}};
}

}  // namespace

void run_tensor_planted(Context& ctx) {
  const std::uint64_t trials = ctx.trials_or(400);
  const LinearCode c = hadamard(gf(2), static_cast<std::size_t>(ctx.integer("k", 3)));
  const Rational eta1 = ctx.rational("eta1", Rational(3, 8));
  const Rational eta2 = ctx.rational("eta2", Rational(3, 8));
  const Rational eps = ctx.rational("eps", Rational(1, 16));
  const Rational eps_extra = ctx.rational("eps_supplementary", Rational(1, 32));
  const double floor = 0.25 - 3 * std::sqrt(0.25 * 0.75 / static_cast<double>(trials));

  const PlantedBlock main = planted_block(ctx, c, c, eta1, eta2, eps, trials, 0);
  const PlantedBlock extra = planted_block(ctx, c, c, eta1, eta2, eps_extra, trials, 1);
  // Below the full grid so rows and columns are genuinely sampled; recovery here is informational.
  const auto reduced = static_cast<std::size_t>(ctx.integer("reduced_samples", 5));
  const PlantedBlock sampled = planted_block(ctx, c, c, eta1, eta2, eps_extra, trials, 2, reduced);
  ctx.aggregate = {{"code", c.tag()},
                   {"eta1", eta1.str()},
                   {"eta2", eta2.str()},
                   {"main", block_json(main, floor)},
                   {"supplementary", block_json(extra, floor)},
                   {"reduced_samples", block_json(sampled, floor)}};
  auto freq = [](const PlantedBlock& b) { return static_cast<double>(b.recovered) / static_cast<double>(b.trials); };
  ctx.verdict("recovery_frequency", main.failures == 0 && freq(main) >= floor);
  ctx.verdict("soundness", main.unsound == 0 && main.failures == 0);
  ctx.verdict("phase_implication", main.implication_failures == 0 && extra.implication_failures == 0);
  ctx.verdict("supplementary_recovery_frequency", extra.failures == 0 && freq(extra) >= floor);
  ctx.verdict("supplementary_soundness", extra.unsound == 0 && extra.failures == 0);
  ctx.verdict("reduced_samples_soundness", sampled.unsound == 0 && sampled.failures == 0);
}

void run_tensor_witness(Context& ctx) {
  const std::uint64_t trials = ctx.trials_or(50);
  const LinearCode code = hadamard(gf(2), static_cast<std::size_t>(ctx.integer("k", 3)));
  const Rational eta = ctx.rational("eta", Rational(1, 4));
  const std::size_t n = code.length();
  const std::int64_t radius = max_count_at_most(eta * Rational(static_cast<std::int64_t>(n)));
  const Rational target = code.relative_distance() * eta;
  const std::int64_t cell_radius = max_count_at_most(target * Rational(static_cast<std::int64_t>(n * n)));
  std::size_t failures = 0;
  std::size_t max_ball = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(ctx.seed_for(t));
    Word r = random_word(code.field(), n, rng);
    if (t % 2 == 1) r = corrupt(code.field(), random_codeword(code, rng), uniform_below(rng, n / 2 + 1), rng);
    std::vector<Word> list;
    for (const ListEntry& e : list_decode_brute(code, r, radius)) list.push_back(e.codeword);
    const std::size_t ball = oracle::ball(code, r, radius).size();
    max_ball = std::max(max_ball, ball);
    const TensorWitness w = tensor_lower_witness(code, r, list);
    std::set<Grid> distinct(w.codewords.begin(), w.codewords.end());
    std::size_t within = 0;
    bool members = true;
    for (const Grid& g : distinct) {
      members = members && is_tensor_codeword(code, code, g);
      if (static_cast<std::int64_t>(cell_errors(g, w.received)) <= cell_radius) ++within;
    }
    const bool ok = members && within >= ball;
    if (!ok) ++failures;
    ctx.outcome({{"trial", t}, {"ball", ball}, {"witness_codewords", within}, {"members", members}}, ok);
  }
  ctx.aggregate = {{"code", code.tag()}, {"eta", eta.str()}, {"delta_eta", target.str()},
                   {"max_ball", max_ball}, {"failures", failures}};
  ctx.verdict("witness_covers_ball", failures == 0);
}

}  // namespace ldlab::exp
