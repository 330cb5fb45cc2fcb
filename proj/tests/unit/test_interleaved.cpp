#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "ldlab/error.hpp"
#include "ldlab/interleaved_decode.hpp"
#include "oracles.hpp"

using namespace ldlab;

namespace {

Grid random_grid(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Grid g(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) g(r, c) = gen::element(f, rng);
  return g;
}

Grid codeword_grid(const InterleavedCode& ic, Rng& rng) {
  std::vector<Word> msgs;
  for (std::size_t j = 0; j < ic.m(); ++j) msgs.push_back(gen::vec(ic.base().field(), ic.base().dimension(), rng));
  return ic.encode(msgs);
}

}  // namespace

TEST(DecodeNaive, CodewordBelowHalfDistanceIsUnique) {
  Rng rng(51);
  const InterleavedCode ic(hadamard(make_field(2), 3), 3);
  const Grid c = codeword_grid(ic, rng);
  const NaiveResult res = decode_naive(ic, c, Rational(1, 8));
  ASSERT_EQ(res.list.size(), 1u);
  EXPECT_EQ(res.list[0], c);
}

TEST(DecodeNaive, SingleColumnMatchesListDecoding) {
  Rng rng(52);
  const LinearCode base = hadamard(make_field(2), 3);
  const InterleavedCode ic(base, 1);
  for (int i = 0; i < 50; ++i) {
    const Word r = gen::vec(base.field(), base.length(), rng);
    Grid g(base.length(), 1);
    g.set_column(0, r);
    const Rational eta(static_cast<std::int64_t>(uniform_below(rng, 4)), 8);
    const NaiveResult res = decode_naive(ic, g, eta);
    const DecodeList list = list_decode_brute(base, r, max_count_at_most(eta * Rational(8)));
    ASSERT_EQ(res.list.size(), list.size());
  }
}

TEST(DecodeNaive, MatchesOracleBallProperty) {
  Rng rng(53);
  for (int i = 0; i < gen::kCases; ++i) {
    const LinearCode base = gen::small_code(rng);
    const std::size_t m = 1 + uniform_below(rng, 3);
    if (saturating_pow(base.codeword_count(), m) > 4096) continue;
    const InterleavedCode ic(base, m);
    const Grid r = uniform_below(rng, 2) ? random_grid(base.field(), base.length(), m, rng) : codeword_grid(ic, rng);
    const std::size_t e = uniform_below(rng, base.length() + 1);
    const Rational eta(static_cast<std::int64_t>(e), static_cast<std::int64_t>(base.length()));
    EXPECT_EQ(decode_naive(ic, r, eta).list, oracle::interleaved_ball(base, m, r, static_cast<std::int64_t>(e)));
  }
}

TEST(DecodeNaive, ComparisonCountWithinCeiling) {
  Rng rng(54);
  const InterleavedCode ic(hadamard(make_field(2), 3), 3);
  for (int i = 0; i < 20; ++i) {
    const Grid r = random_grid(ic.base().field(), 8, 3, rng);
    const NaiveResult res = decode_naive(ic, r, Rational(3, 8));
    EXPECT_LE(res.counters.cell_comparisons, res.counters.comparison_ceiling(3, 8));
  }
}

TEST(EraseDecodeTree, CodewordGivesSingleWhitePath) {
  Rng rng(55);
  const InterleavedCode ic(hadamard(make_field(2), 3), 3);
  const Grid c = codeword_grid(ic, rng);
  const DecodeTree tree = erase_decode_tree(ic, c, Rational(1, 8));
  const auto leaves = tree.leaf_labels();
  ASSERT_EQ(leaves.size(), 1u);
  EXPECT_EQ(leaves[0], c);
  const TreeStats st = tree_stats(tree);
  EXPECT_TRUE(st.clean());
  EXPECT_EQ(st.leaves_at_level_m, 1u);
  for (std::size_t e = 1; e < tree.edges.size(); ++e) EXPECT_EQ(tree.edges[e].color, EdgeColor::kWhite);
}

TEST(EraseDecodeTree, ColorCountsOnHad23) {
  Rng rng(56);
  const LinearCode base = hadamard(make_field(2), 3);
  const InterleavedCode ic(base, 3);
  const Rational eta(3, 8);
  const std::size_t ell = oracle::max_list_size(base, 3);
  const InterleavedParams p = interleaved_params(Rational(1, 2), eta);
  EXPECT_EQ(p.b, 3);
  EXPECT_EQ(p.r, 2);
  for (int i = 0; i < 50; ++i) {
    const Grid r = random_grid(base.field(), 8, 3, rng);
    const DecodeTree tree = erase_decode_tree(ic, r, eta);
    const TreeStats st = tree_stats(tree);
    EXPECT_TRUE(st.clean());
    EXPECT_LE(st.max_blue_out, 1u);
    EXPECT_LE(st.max_blue_on_path, 3u);
    EXPECT_LE(st.max_red_on_path, 2u);
    EXPECT_TRUE(st.white_exclusivity_violations.empty());
    EXPECT_LE(st.leaves_at_level_m, tree_leaf_bound(3, 2, ell).closed_form);
    for (const TreeEdge& e : tree.edges) EXPECT_EQ(tree.nodes[e.to].mu, tree.nodes[e.from].mu + e.weight);
    auto leaves = tree.leaf_labels();
    std::sort(leaves.begin(), leaves.end());
    EXPECT_EQ(leaves, oracle::interleaved_ball(base, 3, r, 3));
  }
}

TEST(EraseDecodeTree, RejectsRadiusAtDistance) {
  const InterleavedCode ic(hadamard(make_field(2), 2), 2);
  try {
    erase_decode_tree(ic, Grid(4, 2), Rational(1, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kRadiusTooLarge);
  }
}

TEST(InterleaveWitness, Examples) {
  const LinearCode h = hadamard(make_field(2), 2);
  for (std::size_t m = 1; m <= 4; ++m) {
    const InterleaveWitness w = interleave_lower_witness(h, m);
    std::vector<Grid> distinct = w.codewords;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    EXPECT_EQ(distinct.size(), std::size_t{1} << m);
    const InterleavedCode ic(h, m);
    const Word c1 = h.min_weight_codeword();
    for (const Grid& g : distinct) {
      EXPECT_TRUE(ic.contains(g));
      EXPECT_LE(Rational(static_cast<std::int64_t>(row_distance(g, w.received).errors), 4), Rational(1, 2));
      for (std::size_t r = 0; r < 4; ++r)
        if (c1[r] == 0) {
          for (std::size_t c = 0; c < m; ++c) EXPECT_EQ(g(r, c), w.received(r, c));
        }
    }
    EXPECT_LE(w.max_distance, Rational(1, 2));
  }
}
