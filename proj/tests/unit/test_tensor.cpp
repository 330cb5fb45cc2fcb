#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "generators.hpp"
#include "ldlab/tensor_decode.hpp"
#include "oracles.hpp"

using namespace ldlab;

namespace {

Grid tensor_codeword(const LinearCode& c2, const LinearCode& c1, Rng& rng) {
  const LinearCode t = tensor(c2, c1);
  return as_tensor_grid(gen::codeword(t, rng), c2.length(), c1.length());
}

}  // namespace

TEST(SampleSizes, Examples) {
  const SampleSizes s = sample_sizes(0.5, 1, 1, 0.125, 1000, 1000);
  EXPECT_NEAR(s.m1_real, 2 * std::log(64.0), 1e-12);
  EXPECT_EQ(s.m1, 9u);
  EXPECT_FALSE(s.capped1);
  const SampleSizes tiny = sample_sizes(0.5, 1, 1, 0.125, 4, 4);
  EXPECT_EQ(tiny.m1, 4u);
  EXPECT_TRUE(tiny.capped1);
  EXPECT_GT(sample_sizes(0.5, 1, 1, 0.05, 1000, 100000).m2_real, sample_sizes(0.5, 1, 1, 0.1, 1000, 100000).m2_real);
  EXPECT_EQ(sampling_tail(0.1, 10, true), 0.0);
  EXPECT_NEAR(sampling_tail(0.1, 50, false), 2 * std::exp(-1.0), 1e-15);
}

TEST(TensorDecode, NoiselessPlantedRecovers) {
  Rng rng(61);
  const LinearCode c = hadamard(make_field(2), 3);
  for (int i = 0; i < 20; ++i) {
    const Grid planted = tensor_codeword(c, c, rng);
    TensorDecodeOptions opt;
    opt.eta1 = Rational(3, 8);
    opt.eta2 = Rational(3, 8);
    opt.eps = Rational(1, 16);
    opt.seed = rng();
    opt.planted = planted;
    const TensorDecodeResult res = tensor_decode(c, c, planted, opt);
    EXPECT_TRUE(std::binary_search(res.list.begin(), res.list.end(), planted));
    ASSERT_TRUE(res.planted_state.has_value());
    const PhaseDiagnostics d = phase_diagnostics(*res.planted_state, planted, Rational(1, 2), Rational(1, 2), opt.eps);
    EXPECT_TRUE(d.phase1 && d.phase2 && d.phase3 && d.phase4);
    EXPECT_TRUE(d.implication_holds);
  }
}

TEST(TensorDecode, OutputsAreSoundProperty) {
  Rng rng(62);
  const LinearCode c1 = hadamard(make_field(2), 2);
  const LinearCode c2 = hadamard(make_field(2), 3);
  for (int i = 0; i < gen::kCases; ++i) {
    Grid r = tensor_codeword(c2, c1, rng);
    const std::size_t flips = uniform_below(rng, 8);
    for (std::size_t pos : sample_subset(rng, 32, flips)) r(pos / 4, pos % 4) ^= 1;
    TensorDecodeOptions opt;
    opt.eta1 = Rational(1, 4);
    opt.eta2 = Rational(3, 8);
    opt.eps = Rational(1, 32);
    opt.seed = rng();
    opt.mode = AdviceMode::kEnumerate;
    opt.m1_override = 2;
    opt.m2_override = 3;
    const TensorDecodeResult res = tensor_decode(c1, c2, r, opt);
    const std::int64_t budget = max_count_at_most(res.target * Rational(32));
    const auto ball = oracle::tensor_ball(c2, c1, r, budget);
    for (const Grid& g : res.list) {
      EXPECT_TRUE(is_tensor_codeword(c2, c1, g));
      EXPECT_TRUE(std::binary_search(ball.begin(), ball.end(), g));
    }
  }
}

TEST(TensorDecode, EnumerateModeFindsBallMembersOften) {
  Rng rng(63);
  const LinearCode c = hadamard(make_field(2), 2);
  std::size_t hits = 0, wanted = 0;
  for (int i = 0; i < 40; ++i) {
    const Grid planted = tensor_codeword(c, c, rng);
    Grid r = planted;
    r(uniform_below(rng, 4), uniform_below(rng, 4)) ^= 1;
    TensorDecodeOptions opt;
    opt.eta1 = Rational(1, 4);
    opt.eta2 = Rational(1, 4);
    opt.eps = Rational(1, 64);
    opt.seed = rng();
    opt.mode = AdviceMode::kEnumerate;
    opt.m1_override = 2;
    opt.m2_override = 2;
    const TensorDecodeResult res = tensor_decode(c, c, r, opt);
    const std::int64_t budget = max_count_at_most(res.target * Rational(16));
    for (const Grid& g : oracle::tensor_ball(c, c, r, budget)) {
      ++wanted;
      hits += std::binary_search(res.list.begin(), res.list.end(), g);
    }
  }
  ASSERT_GT(wanted, 0u);
  EXPECT_GE(4 * hits, wanted);
}

TEST(TensorWitness, Examples) {
  const LinearCode h = hadamard(make_field(2), 2);
  const Word c = h.encode(Word{1, 1});
  const TensorWitness zero = tensor_lower_witness(h, c, {c});
  ASSERT_EQ(zero.codewords.size(), 1u);
  EXPECT_EQ(zero.max_distance, Rational(0));

  // r = (0,0,0,1) is at distance 1 from 0, (0,1,0,1) and (0,0,1,1).
  const Word r{0, 0, 0, 1};
  std::vector<Word> list;
  for (const ListEntry& e : list_decode_brute(h, r, 1)) list.push_back(e.codeword);
  ASSERT_EQ(list.size(), 3u);
  const TensorWitness w = tensor_lower_witness(h, r, list);
  EXPECT_EQ(w.codewords.size(), 3u);
  const Word c0 = h.min_weight_codeword();
  for (const Grid& g : w.codewords) {
    EXPECT_TRUE(is_tensor_codeword(h, h, g));
    std::size_t diff = 0;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        if (g(a, b) != w.received(a, b)) ++diff;
        if (c0[a] == 0) { EXPECT_EQ(g(a, b), w.received(a, b)); }
      }
    EXPECT_LE(Rational(static_cast<std::int64_t>(diff), 16), Rational(1, 8));
  }
}
