#include <gtest/gtest.h>

#include "generators.hpp"
#include "ldlab/error.hpp"
#include "ldlab/families.hpp"
#include "oracles.hpp"

using namespace ldlab;

TEST(Hadamard, Parameters) {
  const LinearCode h = hadamard(make_field(2), 2);
  EXPECT_EQ(h.length(), 4u);
  EXPECT_EQ(h.min_distance(), 2u);
  EXPECT_EQ(h.relative_distance(), Rational(1, 2));
  const LinearCode h3 = hadamard(make_field(3), 2);
  EXPECT_EQ(h3.length(), 9u);
  EXPECT_EQ(h3.min_distance(), 6u);
  EXPECT_EQ(h3.relative_distance(), Rational(2, 3));
}

TEST(Hadamard, EveryNonzeroCodewordHasConstantWeight) {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const LinearCode h = hadamard(make_field(q), 2);
    const std::size_t expected = q * (q - 1);
    h.for_each_codeword([&](std::uint64_t rank, const Word& cw) {
      if (rank != 0) { EXPECT_EQ(weight(cw), expected) << q; }
    });
  }
}

TEST(ReedSolomon, Parameters) {
  const FieldPtr f5 = make_field(5);
  const LinearCode rs = reed_solomon(f5, {0, 1, 2, 3, 4}, 2);
  EXPECT_EQ(rs.dimension(), 3u);
  EXPECT_EQ(rs.min_distance(), 3u);
  EXPECT_EQ(reed_solomon(f5, {0, 1, 2, 3, 4}, 0).min_distance(), 5u);
  EXPECT_EQ(reed_solomon(f5, {0, 1, 2, 3, 4}, 4).min_distance(), 1u);
  try {
    reed_solomon(f5, {0, 1, 1}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDuplicateEvalPoints);
  }
  EXPECT_THROW(reed_solomon(f5, {0, 1}, 2), Error);
}

TEST(ReedSolomon, MdsProperty) {
  Rng rng(31);
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u}) {
    const FieldPtr f = make_field(q);
    for (int i = 0; i < 5; ++i) {
      const std::size_t n = 2 + uniform_below(rng, q - 1);
      const std::size_t deg = uniform_below(rng, std::min<std::size_t>(n, 3));
      std::vector<Symbol> pts;
      for (std::size_t p : sample_subset(rng, q, n)) pts.push_back(static_cast<Symbol>(p));
      EXPECT_EQ(reed_solomon(f, pts, deg).min_distance(), n - deg);
    }
  }
}

TEST(Tensor, Parameters) {
  const LinearCode h = hadamard(make_field(2), 2);
  const LinearCode t = tensor(h, h);
  EXPECT_EQ(t.length(), 16u);
  EXPECT_EQ(t.dimension(), 4u);
  EXPECT_EQ(t.min_distance(), 4u);
  const LinearCode with_trivial = tensor(trivial_code(make_field(2)), h);
  EXPECT_EQ(with_trivial.generator(), h.generator());
}

TEST(Tensor, DistanceMultipliesAndRowsColumnsAreCodewordsProperty) {
  Rng rng(32);
  for (int i = 0; i < 30; ++i) {
    const FieldPtr f = make_field(std::vector<std::uint32_t>{2, 3}[uniform_below(rng, 2)]);
    const LinearCode c1 = gen::code(f, 1 + uniform_below(rng, 2), 2 + uniform_below(rng, 3), rng);
    const LinearCode c2 = gen::code(f, 1 + uniform_below(rng, 2), 2 + uniform_below(rng, 3), rng);
    const LinearCode t = tensor(c2, c1);
    EXPECT_EQ(t.min_distance(), c1.min_distance() * c2.min_distance());
    t.for_each_codeword([&](std::uint64_t, const Word& cw) {
      const Grid g = as_tensor_grid(cw, c2.length(), c1.length());
      for (std::size_t r = 0; r < g.rows(); ++r) EXPECT_TRUE(c1.contains(g.row(r)));
      for (std::size_t c = 0; c < g.cols(); ++c) EXPECT_TRUE(c2.contains(g.column(c)));
      EXPECT_TRUE(is_tensor_codeword(c2, c1, g));
    });
  }
}

TEST(Interleaved, Parameters) {
  const LinearCode h = hadamard(make_field(2), 2);
  const InterleavedCode ic(h, 2);
  EXPECT_EQ(ic.codeword_count(), 16u);
  std::size_t best = 99;
  std::vector<Grid> all;
  ic.for_each_codeword([&](const Grid& g) { all.push_back(g); });
  ASSERT_EQ(all.size(), 16u);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) best = std::min(best, row_distance(all[i], all[j]).errors);
  EXPECT_EQ(best, 2u);
  EXPECT_EQ(ic.min_distance(), 2u);
}

TEST(Interleaved, ColumnsAreCodewordsAndRankIsBoundedProperty) {
  Rng rng(33);
  for (int i = 0; i < gen::kCases; ++i) {
    const LinearCode base = gen::small_code(rng);
    const std::size_t m = 1 + uniform_below(rng, 4);
    const InterleavedCode ic(base, m);
    std::vector<Word> msgs;
    for (std::size_t j = 0; j < m; ++j) msgs.push_back(gen::vec(base.field(), base.dimension(), rng));
    const Grid g = ic.encode(msgs);
    EXPECT_TRUE(ic.contains(g));
    for (std::size_t j = 0; j < m; ++j) EXPECT_EQ(g.column(j), base.encode(msgs[j]));
    Matrix mat(g.rows(), g.cols());
    for (std::size_t r = 0; r < g.rows(); ++r)
      for (std::size_t c = 0; c < g.cols(); ++c) mat(r, c) = g(r, c);
    EXPECT_LE(oracle::rank(base.field(), mat), std::min(m, base.dimension()));
  }
}

TEST(BlockLinear, Examples) {
  const FieldPtr f2 = make_field(2);
  const LinearCode h = hadamard(f2, 2);
  const LinearCode t = tensor(h, h);
  t.for_each_codeword([&](std::uint64_t, const Word& cw) { EXPECT_TRUE(is_block_linear(*f2, cw, 2, 2)); });
  const Word and2{0, 0, 0, 1};  // x1 x2 over (x1, x2) with x1 most significant
  EXPECT_TRUE(is_block_linear(*f2, and2, 2, 1));
  EXPECT_FALSE(is_block_linear(*f2, and2, 1, 2));
}
