#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "generators.hpp"
#include "ldlab/bounds.hpp"
#include "ldlab/error.hpp"
#include "ldlab/families.hpp"
#include "oracles.hpp"

using namespace ldlab;

TEST(Johnson, Examples) {
  EXPECT_NEAR(johnson_radius(JohnsonVariant::kAlphabetFree, 0.75), 0.5, 1e-15);
  EXPECT_NEAR(johnson_radius(JohnsonVariant::kBinary, 0.5), 0.5, 1e-15);
  for (auto v : {JohnsonVariant::kAlphabetFree, JohnsonVariant::kBinary, JohnsonVariant::kQary})
    EXPECT_EQ(johnson_radius(v, 0.0, 3), 0.0);
  EXPECT_NEAR(johnson_radius(JohnsonVariant::kBinary, 1e-6) / 1e-6, 0.5, 1e-6);
  EXPECT_THROW(johnson_radius(JohnsonVariant::kBinary, 0.6), Error);
  EXPECT_THROW(johnson_radius(JohnsonVariant::kQary, 0.7, 3), Error);
  EXPECT_NEAR(johnson_binary_inverse(johnson_radius(JohnsonVariant::kBinary, 0.3)), 0.3, 1e-12);
  // q = 2 q-ary form equals the binary form
  EXPECT_NEAR(johnson_radius(JohnsonVariant::kQary, 0.3, 2), johnson_radius(JohnsonVariant::kBinary, 0.3), 1e-15);
}

TEST(InterleavedBound, Examples) {
  const InterleavedParams p = interleaved_params(Rational(1, 2), Rational(1, 4));
  EXPECT_EQ(p.b, 1);
  EXPECT_EQ(p.r, 1);
  EXPECT_EQ(interleaved_bound(Rational(1, 2), Rational(1, 4), 2).value, 4);
  const BoundReport small = interleaved_bound(Rational(1, 2), Rational(1, 1000), 7);
  EXPECT_EQ(small.extras.at("b"), 1);
  EXPECT_EQ(small.extras.at("r"), 1);
  EXPECT_EQ(small.value, 14);
  // ell = 1 leaves only the binomial
  const InterleavedParams q = interleaved_params(Rational(1, 2), Rational(1, 5));
  EXPECT_EQ(interleaved_bound(Rational(1, 2), Rational(1, 5), 1).value,
            static_cast<double>(binomial(static_cast<std::uint64_t>(q.b + q.r), static_cast<std::uint64_t>(q.r))));
  EXPECT_THROW(interleaved_bound(Rational(1, 2), Rational(1, 2), 2), Error);
}

TEST(InterleavedBound, ExactCeilingsProperty) {
  // b and r against a direct search for the least integers.
  for (std::int64_t den = 2; den <= 40; ++den)
    for (std::int64_t num = 1; num < den; ++num) {
      const Rational delta(1, 2), eta(num, 2 * den);
      const InterleavedParams p = interleaved_params(delta, eta);
      std::int64_t b = 0;
      while (Rational(b) * (delta - eta) < eta) ++b;
      std::int64_t r = 0;
      while (Rational(std::int64_t{1} << r) * (delta - eta) < delta) ++r;
      EXPECT_EQ(p.b, b);
      EXPECT_EQ(p.r, r);
    }
}

TEST(InterleavedBound, RecomputeReproducesValue) {
  const BoundReport rep = interleaved_bound(Rational(2, 3), Rational(1, 3), 5);
  EXPECT_EQ(recompute(rep).value, rep.value);
  const BoundReport t = tensor_listsize_formula(2, 0.5, 3, 4, 0.1);
  EXPECT_EQ(recompute(t).value, t.value);
  const BoundReport rt = repeated_tensor_bound(3, 0.4, 2, 0.05, 8);
  EXPECT_EQ(recompute(rt).value, rt.value);
  for (const BoundReport& b : binary_interleaved_bounds_johnson(0.5, 0.2, 0.05)) EXPECT_EQ(recompute(b).value, b.value);
  const auto custom = binary_interleaved_bounds(0.5, 0.2, 0.05, [](double) { return 3.0; });
  EXPECT_THROW(recompute(custom[0]), Error);
}

TEST(TreeLeafBound, Examples) {
  for (std::uint64_t b = 0; b < 5; ++b) EXPECT_EQ(tree_leaf_bound(b, 0, 3).recursion, 1u);
  for (std::uint64_t r = 0; r < 5; ++r) EXPECT_EQ(tree_leaf_bound(0, r, 3).recursion, static_cast<std::uint64_t>(std::pow(3, r)));
  const TreeLeafBound t = tree_leaf_bound(1, 1, 2);
  EXPECT_EQ(t.recursion, 4u);
  EXPECT_EQ(t.closed_form, 4u);
  EXPECT_TRUE(t.holds);
}

TEST(TreeLeafBound, RecursionAtMostClosedFormProperty) {
  for (std::uint64_t b = 0; b < 8; ++b)
    for (std::uint64_t r = 0; r < 6; ++r)
      for (std::uint64_t ell = 1; ell < 6; ++ell) {
        const TreeLeafBound t = tree_leaf_bound(b, r, ell);
        EXPECT_TRUE(t.holds);
        EXPECT_LE(t.recursion, t.closed_form);
      }
}

TEST(Combinatorics, BinomialAndGaussian) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35u);
  EXPECT_EQ(gaussian_binomial(3, 1, 3), 13u);
  EXPECT_EQ(gaussian_binomial(5, 0, 2), 1u);
}

TEST(Ghw, Examples) {
  const LinearCode h3 = hadamard(make_field(2), 3);
  for (std::size_t r = 1; r <= 3; ++r) {
    const Rational expected = Rational(1) - Rational(1, std::int64_t{1} << r);
    EXPECT_EQ(ghw(h3, r), expected);
    EXPECT_EQ(ghw_lower_bound(2, Rational(1, 2), r), expected);
  }
  EXPECT_EQ(ghw(h3, 1), h3.relative_distance());
  EXPECT_EQ(ghw_lower_bound(2, Rational(1, 3), 1), Rational(1, 3));
  EXPECT_EQ(ghw_lower_bound(2, Rational(1, 3), 40) * Rational(1, 2) < Rational(1, 3), true);
  EXPECT_EQ(ghw(reed_solomon(make_field(5), {0, 1, 2, 3, 4}, 2), 3), Rational(1));
}

TEST(Ghw, MatchesOracleAndLowerBoundProperty) {
  Rng rng(41);
  for (int i = 0; i < 40; ++i) {
    const FieldPtr f = make_field(std::vector<std::uint32_t>{2, 3, 4}[uniform_below(rng, 3)]);
    const std::size_t k = 1 + uniform_below(rng, 3);
    if (saturating_pow(f->order(), k) > 64) continue;
    const LinearCode c = gen::code(f, k, k + uniform_below(rng, 5), rng);
    for (std::size_t r = 1; r <= k; ++r) {
      if (saturating_pow(c.codeword_count(), r) > (1u << 16)) continue;
      const Rational g = ghw(c, r);
      EXPECT_EQ(g, oracle::ghw(c, r));
      EXPECT_GE(g, ghw_lower_bound(f->order(), c.relative_distance(), r));
      if (r > 1) { EXPECT_GT(g, ghw(c, r - 1)); }
    }
  }
}

TEST(DeletionGraph, Examples) {
  const FieldPtr f2 = make_field(2);
  const DeletionGraphReport empty = deletion_graph_analyze(*f2, {}, [](const Word&) { return true; });
  EXPECT_EQ(empty.vertices, 0u);
  EXPECT_EQ(empty.edges, 0u);
  const std::vector<Word> words = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 1}};
  const DeletionGraphReport complete = deletion_graph_analyze(*f2, words, [](const Word&) { return true; });
  EXPECT_EQ(complete.edges, 6u);
  EXPECT_EQ(complete.max_degree, 3u);
  ASSERT_TRUE(complete.alpha.has_value());
  EXPECT_EQ(*complete.alpha, 1u);
  EXPECT_TRUE(complete.bound_holds);
  const DeletionGraphReport none = deletion_graph_analyze(*f2, words, [](const Word&) { return false; });
  EXPECT_EQ(*none.alpha, 4u);
  EXPECT_TRUE(none.bound_holds);
}

TEST(DeletionGraph, IndependenceNumberMatchesBruteForceProperty) {
  Rng rng(42);
  for (int i = 0; i < gen::kCases; ++i) {
    const std::size_t n = 1 + uniform_below(rng, 12);
    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (uniform_below(rng, 3) == 0) {
          adj[a] |= std::uint64_t{1} << b;
          adj[b] |= std::uint64_t{1} << a;
        }
    std::size_t best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      bool independent = true;
      for (std::size_t a = 0; a < n && independent; ++a)
        if (((s >> a) & 1) && (adj[a] & s)) independent = false;
      if (independent) best = std::max<std::size_t>(best, std::popcount(s));
    }
    EXPECT_EQ(independence_number(adj), best);
  }
}

TEST(TensorFormula, Examples) {
  const BoundReport rep = tensor_listsize_formula(2, 0.5, 1, 1, 0.125);
  EXPECT_NEAR(rep.extras.at("m1"), 2 * std::log(64.0), 1e-12);
  EXPECT_NEAR(rep.extras.at("m2"), 32 * std::log(64.0), 1e-12);
  EXPECT_TRUE(rep.log_domain);
  const BoundReport doubled = tensor_listsize_formula(2, 1.0, 1, 1, 0.125);
  EXPECT_NEAR(doubled.extras.at("m1") * 4, rep.extras.at("m1"), 1e-12);
  double last = 0;
  for (double eps : {0.2, 0.1, 0.05, 0.01}) {
    const double v = tensor_listsize_formula(2, 0.5, 2, 2, eps).value;
    EXPECT_GT(v, last);
    last = v;
  }
}

TEST(RepeatedTensor, Examples) {
  const BoundReport one = repeated_tensor_bound(2, 0.5, 3, 0.1, 1);
  EXPECT_NEAR(one.value, std::log(std::log(4 * 3 / 0.1)), 1e-12);
  const BoundReport two = repeated_tensor_bound(2, 0.5, 3, 0.1, 2);
  const double a = two.extras.at("a"), s0 = two.extras.at("s0");
  EXPECT_NEAR(two.value, std::log(a * s0 * s0), 1e-12);
  const BoundReport four = repeated_tensor_bound(2, 0.5, 3, 0.1, 4);
  EXPECT_LE(four.value, four.extras.at("log_closed_form"));
  try {
    repeated_tensor_bound(2, 0.5, 3, 0.1, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kMNotPowerOfTwo);
  }
}

TEST(BinaryBounds, Examples) {
  EXPECT_EQ(binary_rank_threshold(0.5), 3);
  const auto reps = binary_interleaved_bounds(0.5, 0.2, 0.05, [](double) { return 2.0; });
  for (const BoundReport& rep : reps)
    if (rep.name == "binary_interleaved_rank_r") {
      EXPECT_EQ(rep.extras.at("r"), 3);
      EXPECT_NEAR(rep.value, 8.0 * 3 * 8, 1e-9);  // c^r r 2^r with c = 2
    }
  const auto johnson = binary_interleaved_bounds_johnson(0.5, johnson_radius(JohnsonVariant::kBinary, 0.5) - 0.05, 0.05);
  for (const BoundReport& rep : johnson)
    if (rep.name == "binary_interleaved_johnson_chain") {
      EXPECT_NEAR(rep.extras.at("c_prime"), c_prime_delta(0.5), 1e-12);
      EXPECT_LE(rep.value, rep.extras.at("c_prime_over_eps2") * (1 + 1e-12));
    }
}

TEST(Serfling, Examples) {
  std::vector<double> half(1000);
  for (std::size_t i = 0; i < half.size(); ++i) half[i] = i % 2 ? 1.0 : 0.0;
  const SerflingResult r = serfling_check(half, 50, 0.3, 10000, 1);
  EXPECT_NEAR(r.bound, 2 * std::exp(-2 * 0.09 * 50), 1e-15);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(serfling_check(half, 10, 1.0, 1000, 2).empirical_tail, 0.0);
  const std::vector<double> constant(100, 0.4);
  EXPECT_EQ(serfling_check(constant, 10, 0.01, 1000, 3).empirical_tail, 0.0);
  EXPECT_THROW(serfling_check(constant, 101, 0.1, 10, 1), Error);
}
