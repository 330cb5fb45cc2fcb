#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "common.hpp"
#include "context.hpp"
#include "ldlab/bounds.hpp"
#include "ldlab/error.hpp"
#include "oracles.hpp"

namespace ldlab::exp {

namespace {

std::vector<Matrix> matrices(const std::vector<LinEntry>& list) {
  std::vector<Matrix> out;
  for (const LinEntry& e : list) out.push_back(e.M);
  return out;
}

// Uniform tables, noisy low-rank tables, and row-wise mixtures of two low-rank maps.
Grid lin_received(const FieldPtr& f, std::size_t k, std::size_t m, std::uint64_t t, Rng& rng) {
  const std::size_t n = static_cast<std::size_t>(saturating_pow(f->order(), k));
  const std::size_t max_rank = std::min<std::size_t>({k, m, 2});
  switch (t % 3) {
    case 0:
      return random_grid(*f, n, m, rng);
    case 1: {
      const auto r = uniform_below(rng, max_rank + 1);
      const LinTransform l = random_transform_of_rank(f, k, m, r, rng);
      return corrupt_rows(*f, l.table(), uniform_below(rng, n / 2 + 1), rng);
    }
    default: {
      const LinTransform a = random_transform_of_rank(f, k, m, uniform_below(rng, max_rank + 1), rng);
      const LinTransform b = random_transform_of_rank(f, k, m, uniform_below(rng, max_rank + 1), rng);
      Grid g = a.table();
      const Grid other = b.table();
      for (std::size_t x = 0; x < n; ++x)
        if (uniform_below(rng, 2) == 1) g.set_row(x, other.row(x));
      return g;
    }
  }
}

// A random transform table with a random quadratic form added to one column;
// full-rank forms sit far from every linear map and give the largest balls.
Grid quadratic_table(const FieldPtr& f2, std::size_t k, std::size_t m, Rng& rng) {
  Grid g = random_transform_of_rank(f2, k, m, uniform_below(rng, std::min<std::size_t>(k, m) + 1), rng).table();
  const std::size_t col = uniform_below(rng, m);
  std::vector<std::pair<std::size_t, std::size_t>> terms;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (uniform_below(rng, 2) == 1) terms.emplace_back(i, j);
  for (std::size_t x = 0; x < g.rows(); ++x) {
    Symbol q = 0;
    for (const auto& [i, j] : terms) q ^= ((x >> (k - 1 - i)) & (x >> (k - 1 - j)) & 1u);
    g(x, col) ^= q;
  }
  return g;
}

// Every vector in the span of `basis` over GF(2).
std::vector<Word> binary_span(const std::vector<Word>& basis, std::size_t m) {
  std::vector<Word> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask) {
    Word v(m, 0);
    for (std::size_t s = 0; s < basis.size(); ++s)
      if ((mask >> s) & 1u)
        for (std::size_t j = 0; j < m; ++j) v[j] ^= basis[s][j];
    out.push_back(std::move(v));
  }
  return out;
}

// Some basis of RowSpan(M) has every member at weight >= threshold.
bool frequent_basis_exists(const ReceivedTable& r, const Matrix& M, const Rational& threshold) {
  return pool_spans_row_space(*r.field, M, frequent_vectors(r, threshold));
}

}  // namespace

void run_lintrans_decoders(Context& ctx) {
  const std::uint64_t trials = ctx.trials_or(50);
  const FieldPtr f2 = gf(2);
  const std::vector<Rational> epsilons = {Rational(1, 16), Rational(1, 8)};
  std::uint64_t index = 0;
  std::size_t mismatch1 = 0, mismatch2 = 0, bound1 = 0, bound2 = 0, necessity = 0, instances = 0;
  double worst1 = 0, worst2 = 0;
  json groups = json::array();
  for (std::size_t k = 2; k <= 4; ++k)
    for (std::size_t m = 2; m <= 3; ++m)
      for (const Rational& eps : epsilons) {
        std::size_t g_mis = 0, g_max1 = 0, g_max2 = 0;
        for (std::uint64_t t = 0; t < trials; ++t) {
          Rng rng(ctx.seed_for(index++));
          const ReceivedTable received = make_received(f2, k, lin_received(f2, k, m, t, rng));
          const LinDecodeResult r1 = decode_rank1(received, eps);
          const LinDecodeResult r2 = decode_rank2(received, eps);
          const auto o1 = oracle::lin_ball(received, r1.budget, 1);
          const auto o2 = oracle::lin_ball(received, r2.budget, 2);
          ++instances;
          const bool eq1 = matrices(r1.list) == o1;
          const bool eq2 = matrices(r2.list) == o2;
          if (!eq1) ++mismatch1;
          if (!eq2) ++mismatch2;
          if (!r1.within_bound) ++bound1;
          if (!r2.within_bound) ++bound2;
          g_max1 = std::max(g_max1, r1.list.size());
          g_max2 = std::max(g_max2, r2.list.size());
          worst1 = std::max(worst1, r1.list_eps2);
          worst2 = std::max(worst2, r2.list_eps2);
          // Every low-rank codeword in the ball has a basis passing the weight threshold.
          bool needed = true;
          for (const Matrix& M : o2) {
            const std::size_t r = oracle::rank(*f2, M);
            if (r == 1) needed = needed && frequent_basis_exists(received, M, eps);
            if (r == 2) needed = needed && frequent_basis_exists(received, M, eps / Rational(2));
          }
          if (!needed) ++necessity;
          const bool ok = eq1 && eq2 && needed && r1.within_bound && r2.within_bound;
          if (!ok) ++g_mis;
          ctx.outcome({{"k", k}, {"m", m}, {"eps", eps.str()}, {"trial", t}, {"rank1", r1.list.size()},
                       {"rank1_oracle", o1.size()}, {"rank2", r2.list.size()}, {"rank2_oracle", o2.size()},
                       {"threshold_necessity", needed}},
                      ok);
        }
        groups.push_back({{"k", k}, {"m", m}, {"eps", eps.str()}, {"received_words", trials},
                          {"failures", g_mis}, {"max_rank1_list", g_max1}, {"max_rank2_list", g_max2}});
      }

  // Exact weight of every row-span vector of a rank-r map over GF(2).
  const std::uint64_t weight_trials = static_cast<std::uint64_t>(ctx.integer("weight_trials", 200));
  std::size_t weight_failures = 0;
  for (std::uint64_t t = 0; t < weight_trials; ++t) {
    Rng rng(ctx.seed_for(1000000 + t));
    const std::size_t r = uniform_below(rng, 4);
    const std::size_t k = std::max<std::size_t>(r, 1) + uniform_below(rng, 7 - std::max<std::size_t>(r, 1));
    const std::size_t m = std::max<std::size_t>(r, 1) + uniform_below(rng, 5 - std::max<std::size_t>(r, 1));
    const LinTransform l = random_transform_of_rank(f2, k, m, r, rng);
    const ReceivedTable table = make_received(f2, k, l.table());
    const RankDecomposition dec = rank_decompose(l);
    const Rational expected(1, std::int64_t{1} << r);
    bool ok = dec.rank == r && outer_sum(*f2, dec, k, m) == l.M;
    for (const Word& v : binary_span(dec.v, m)) ok = ok && weight_profile(table, v) == expected;
    if (!ok) ++weight_failures;
    ctx.outcome({{"weight_trial", t}, {"k", k}, {"m", m}, {"rank", r}}, ok);
  }

  ctx.aggregate = {{"groups", groups},
                   {"instances", instances},
                   {"rank1_mismatches", mismatch1},
                   {"rank2_mismatches", mismatch2},
                   {"rank1_bound_failures", bound1},
                   {"rank2_bound_failures", bound2},
                   {"rank1_max_list_eps2", worst1},
                   {"rank2_max_list_eps2", worst2},
                   {"rank2_constant", 101},
                   {"threshold_necessity_failures", necessity},
                   {"weight_trials", weight_trials},
                   {"weight_failures", weight_failures}};
  ctx.verdict("rank1_equals_oracle", mismatch1 == 0);
  ctx.verdict("rank2_equals_oracle", mismatch2 == 0);
  ctx.verdict("rank1_list_bound", bound1 == 0);
  ctx.verdict("rank2_list_bound", bound2 == 0);
  ctx.verdict("threshold_necessity", necessity == 0);
  ctx.verdict("row_span_weight_exact", weight_failures == 0);
}

void run_erasure_lists(Context& ctx) {
  const std::uint64_t trials = ctx.trials_or(200);
  const FieldPtr f2 = gf(2);

  // Errors-and-erasures list size against twice the error-only list size.
  const LinearCode had4 = hadamard(f2, 4);
  const std::size_t n = had4.length();
  const std::size_t d = had4.min_distance();
  std::vector<std::size_t> ell(d);
  for (std::size_t rho = 0; rho < d; ++rho) ell[rho] = oracle::max_list_size(had4, static_cast<std::int64_t>(rho));
  std::size_t violations_a = 0, oracle_a = 0, max_list_a = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(ctx.seed_for(t));
    const std::size_t erasures = uniform_below(rng, d);
    const std::size_t total = erasures + uniform_below(rng, d - erasures);
    Word r = random_word(*f2, n, rng);
    if (t % 2 == 1) r = corrupt(*f2, random_codeword(had4, rng), uniform_below(rng, total - erasures + 2), rng);
    for (std::size_t pos : sample_subset(rng, n, erasures)) r[pos] = kErased;
    const auto list = hadamard_ball(f2, 4, r, static_cast<std::int64_t>(total));
    if (list.size() != oracle::hadamard_ball(r, 4, static_cast<std::int64_t>(total)).size()) ++oracle_a;
    const std::size_t rho = (2 * total - erasures) / 2;
    const std::size_t bound = 2 * ell[rho];
    max_list_a = std::max(max_list_a, list.size());
    if (list.size() > bound) ++violations_a;
    ctx.outcome({{"part", "errors_and_erasures"}, {"trial", t}, {"erasures", erasures}, {"radius", total},
                 {"list", list.size()}, {"bound", bound}},
                list.size() <= bound);
  }

  // Hadamard decoding with erasures against 2/(eta + 2 eps)^2.
  const std::vector<Rational> epsilons = {Rational(1, 16), Rational(1, 8), Rational(1, 4)};
  std::size_t violations_b = 0, oracle_b = 0, degenerate = 0;
  double max_ratio = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(ctx.seed_for(trials + t));
    const bool fixed_case = t % 4 == 0;
    const std::size_t k = fixed_case ? 2 + uniform_below(rng, 9) : 1 + uniform_below(rng, 10);
    const std::size_t len = std::size_t{1} << k;
    const Rational eps = fixed_case ? Rational(1, 8) : epsilons[uniform_below(rng, epsilons.size())];
    const std::size_t erasures = fixed_case ? len / 4 : uniform_below(rng, len + 1);
    const LinearCode code = hadamard(f2, k);
    Word r = corrupt(*f2, random_codeword(code, rng), uniform_below(rng, len / 2 + 1), rng);
    for (std::size_t pos : sample_subset(rng, len, erasures)) r[pos] = kErased;
    const HadamardErasureResult res = hadamard_decode_erasures(r, k, eps);
    const std::int64_t strict = max_count_below((Rational(1, 2) - eps) * Rational(static_cast<std::int64_t>(len)));
    if (res.list.size() != oracle::hadamard_ball(r, k, strict).size()) ++oracle_b;
    if (!res.bound_applies) ++degenerate;
    if (res.bound_applies) max_ratio = std::max(max_ratio, static_cast<double>(res.list.size()) / res.bound);
    if (!res.within_bound) ++violations_b;
    ctx.outcome({{"part", "hadamard_erasures"}, {"trial", t}, {"k", k}, {"eps", eps.str()},
                 {"erased_fraction", res.erased_fraction.str()}, {"list", res.list.size()}, {"bound", res.bound}},
                res.within_bound);
  }
  json ells = json::array();
  for (std::size_t v : ell) ells.push_back(v);
  ctx.aggregate = {{"errors_and_erasures",
                    {{"code", had4.tag()}, {"trials", trials}, {"measured_list_size_by_radius", ells},
                     {"max_list", max_list_a}, {"violations", violations_a}, {"oracle_mismatches", oracle_a}}},
                   {"hadamard_erasures",
                    {{"trials", trials}, {"max_list_over_bound", max_ratio}, {"degenerate_all_erased", degenerate},
                     {"violations", violations_b}, {"oracle_mismatches", oracle_b}}}};
  ctx.verdict("errors_and_erasures_bound", violations_a == 0);
  ctx.verdict("hadamard_erasure_bound", violations_b == 0);
  ctx.verdict("oracle_agreement", oracle_a == 0 && oracle_b == 0);
}

void run_lintrans_full(Context& ctx) {
  const std::uint64_t trials = ctx.trials_or(20);
  const FieldPtr f2 = gf(2);
  const auto k = static_cast<std::size_t>(ctx.integer("k", 4));
  const auto m = static_cast<std::size_t>(ctx.integer("m", 4));
  const std::vector<Rational> epsilons = {Rational(1, 8), Rational(1, 16)};
  std::uint64_t index = 0;
  std::size_t rank2_bad = 0, oracle_bad = 0, symmetry_bad = 0, deletion_bad = 0, basis_bad = 0;
  double worst_eps2 = 0;
  double worst_ratio = 1;
  std::size_t max_list = 0;
  for (const Rational& eps : epsilons) {
    for (std::uint64_t t = 0; t < trials; ++t) {
      Rng rng(ctx.seed_for(index++));
      const Grid table = t % 4 == 3 ? quadratic_table(f2, k, m, rng) : lin_received(f2, k, m, t, rng);
      const ReceivedTable received = make_received(f2, k, table);
      const FullDecodeResult full = decode_full(received, eps);
      const auto& list = full.result.list;
      max_list = std::max(max_list, list.size());
      worst_eps2 = std::max(worst_eps2, full.result.list_eps2);
      if (full.rank_le2 > 0)
        worst_ratio = std::max(worst_ratio, static_cast<double>(list.size()) / static_cast<double>(full.rank_le2));
      if (!full.rank2_consistent) ++rank2_bad;
      const bool oracle_ok = matrices(list) == oracle::lin_ball(received, full.result.budget, m);
      if (!oracle_ok) ++oracle_bad;

      // Relabel the output coordinates by a random permutation.
      std::vector<std::size_t> perm(m);
      std::iota(perm.begin(), perm.end(), 0);
      for (std::size_t i = m; i > 1; --i) std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
      Grid permuted(received.size(), m);
      for (std::size_t x = 0; x < received.size(); ++x)
        for (std::size_t j = 0; j < m; ++j) permuted(x, perm[j]) = received.values(x, j);
      std::vector<Matrix> expected;
      for (const LinEntry& e : list) {
        Matrix pm(k, m);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < m; ++j) pm(i, perm[j]) = e.M(i, j);
        expected.push_back(std::move(pm));
      }
      std::sort(expected.begin(), expected.end());
      const bool symmetric = matrices(decode_full(make_received(f2, k, permuted), eps).result.list) == expected;
      if (!symmetric) ++symmetry_bad;

      // Low-rank deletion graph over the full ball.
      std::vector<Word> words;
      for (const LinEntry& e : list) words.push_back(LinTransform{f2, k, m, e.M}.table().flat());
      const std::size_t n = received.size();
      const auto graph = deletion_graph_analyze(*f2, words, [&](const Word& diff) {
        return grid_rank(*f2, Grid::from_flat(n, m, diff)) <= 2;
      });
      if (graph.alpha && !graph.bound_holds) ++deletion_bad;

      // Frequent-vector bases for every codeword in the ball.
      bool basis_ok = true;
      for (const LinEntry& e : list) {
        if (e.rank == 0) continue;
        const Rational threshold = eps * Rational(2) / Rational(std::int64_t{1} << e.rank);
        basis_ok = basis_ok && frequent_basis_exists(received, e.M, threshold);
      }
      if (!basis_ok) ++basis_bad;
      ctx.outcome({{"eps", eps.str()}, {"trial", t}, {"list", list.size()}, {"oracle", oracle_ok},
                    {"symmetric", symmetric}, {"rank2_consistent", full.rank2_consistent}, {"basis", basis_ok}},
                  oracle_ok && symmetric && full.rank2_consistent && basis_ok);
    }
  }

  // q-ary balls: exhaustive comparison and the q^6 eps^-2 / eps^-5 shape.
  struct QCase {
    std::uint32_t q;
    Rational eps;
  };
  const std::vector<QCase> qcases = {{3, Rational(1, 9)}, {3, Rational(1, 6)}, {4, Rational(1, 8)}, {4, Rational(1, 16)}};
  std::size_t q_oracle_bad = 0, q_rank1_bad = 0, q_bound_bad = 0;
  double shape_constant = 0;
  json qgroups = json::array();
  for (const QCase& qc : qcases) {
    const FieldPtr f = gf(qc.q);
    const std::size_t qk = 2, qm = 2;
    std::size_t q_max = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      Rng rng(ctx.seed_for(index++));
      const ReceivedTable received = make_received(f, qk, lin_received(f, qk, qm, t, rng));
      const FullDecodeResult full = decode_full(received, qc.eps);
      if (matrices(full.result.list) != oracle::lin_ball(received, full.result.budget, qm)) ++q_oracle_bad;
      const LinDecodeResult r1 = decode_rank1_q(received, qc.eps);
      if (matrices(r1.list) != oracle::lin_ball(received, r1.budget, 1)) ++q_rank1_bad;
      if (!r1.within_bound) ++q_bound_bad;
      q_max = std::max(q_max, full.result.list.size());
    }
    const double e = qc.eps.to_double();
    const double shape = std::min(std::pow(qc.q, 6) / (e * e), std::pow(e, -5));
    shape_constant = std::max(shape_constant, static_cast<double>(q_max) / shape);
    qgroups.push_back({{"q", qc.q}, {"eps", qc.eps.str()}, {"k", qk}, {"m", qm}, {"max_list", q_max},
                       {"observed_constant", static_cast<double>(q_max) / shape}});
  }

  const double window_low = 0.5, window_high = 128;
  ctx.aggregate = {{"k", k},
                   {"m", m},
                   {"max_list", max_list},
                   {"max_list_eps2", worst_eps2},
                   {"window", {window_low, window_high}},
                   {"window_lower_reached", worst_eps2 >= window_low},
                   {"max_full_over_rank2", worst_ratio},
                   {"rank2_inconsistent", rank2_bad},
                   {"oracle_mismatches", oracle_bad},
                   {"symmetry_failures", symmetry_bad},
                   {"deletion_bound_failures", deletion_bad},
                   {"frequent_basis_failures", basis_bad},
                   {"qary", qgroups},
                   {"qary_observed_constant", shape_constant}};
  ctx.verdict("rank2_sublist_matches", rank2_bad == 0);
  ctx.verdict("full_ball_equals_oracle", oracle_bad == 0);
  ctx.verdict("relabeling_equivariance", symmetry_bad == 0);
  ctx.verdict("deletion_bound", deletion_bad == 0);
  ctx.verdict("frequent_basis_spans", basis_bad == 0);
  ctx.verdict("list_eps2_upper_window", worst_eps2 <= window_high);
  ctx.verdict("qary_full_ball_equals_oracle", q_oracle_bad == 0);
  ctx.verdict("qary_rank1_equals_oracle", q_rank1_bad == 0);
  ctx.verdict("qary_rank1_bound", q_bound_bad == 0);
}

}  // namespace ldlab::exp
