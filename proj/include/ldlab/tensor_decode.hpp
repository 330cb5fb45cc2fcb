#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ldlab/families.hpp"

namespace ldlab {

struct SampleSizes {
  double m1_real = 0;  // ln(8 l1/eps)/(2 delta1^2)
  double m2_real = 0;  // ln(8 l2/eps)/(2 eps^2)
  std::size_t m1 = 0;  // |T|, after ceiling and capping at n1
  std::size_t m2 = 0;  // |S|, after ceiling and capping at n2
  bool capped1 = false;
  bool capped2 = false;
};

SampleSizes sample_sizes(double delta1, double ell1, double ell2, double eps, std::size_t n1, std::size_t n2);

/// 2 exp(-2 gamma^2 m); zero when the sample is the whole index set.
double sampling_tail(double gamma, std::size_t m, bool full_set);

enum class AdviceMode { kEnumerate, kPlanted };

inline constexpr std::uint64_t kDefaultAdviceCap = std::uint64_t{1} << 16;

struct TensorDecodeOptions {
  Rational eta1;
  Rational eta2;
  Rational eps;
  std::uint64_t seed = 0;
  AdviceMode mode = AdviceMode::kPlanted;
  std::optional<Grid> planted;  // required in planted mode
  /// List-size bounds feeding the sample sizes; 0 means "largest row/column
  /// list seen on this received word".
  double ell1 = 0;
  double ell2 = 0;
  std::optional<std::size_t> m1_override;
  std::optional<std::size_t> m2_override;
  std::uint64_t advice_cap = kDefaultAdviceCap;
};

/// One advice branch. Row-indexed containers use the positions of S for B and
/// [n2] for E; a failed row or column is all-erased.
struct PhaseState {
  std::vector<std::size_t> S;  // rows, |S| = m2
  std::vector<std::size_t> T;  // columns, |T| = m1
  Grid A;                      // |S| x |T| advice
  Grid B;                      // |S| x n1
  std::vector<bool> s_success;
  Grid D;  // n2 x n1
  std::vector<bool> t_success;
  Grid E;  // n2 x n1
  std::vector<bool> u_success;
  bool phase4_unique = false;
  Grid C;  // valid when phase4_unique
  bool emitted = false;
};

struct TensorDecodeResult {
  std::vector<Grid> list;  // sorted, deduplicated
  SampleSizes sizes;
  Rational eta_star;
  Rational target;  // eta* - 3 eps
  std::uint64_t advice_tried = 0;
  std::uint64_t phase4_failures = 0;
  std::size_t max_row_list = 0;
  std::size_t max_column_list = 0;
  std::optional<PhaseState> planted_state;  // planted mode only
};

/// Four-phase advice-driven decoder for C2 (x) C1 on an n2 x n1 grid. Lists are
/// computed once per row and column; tie-breaks take the first list element.
TensorDecodeResult tensor_decode(const LinearCode& c1, const LinearCode& c2, const Grid& received,
                                 const TensorDecodeOptions& options);

struct PhaseDiagnostics {
  std::size_t s_size = 0, s_success = 0, s_right = 0, s_wrong = 0;
  std::size_t t_success = 0, t_right = 0, t_wrong = 0;
  std::size_t u_success = 0, u_wrong = 0;
  bool phase1 = false;  // |S_success| >= (1-d2+2e)|S|, |S_r| >= (1-d2+e)|S|, |S_w| <= e|S|
  bool phase2 = false;  // |T_success| >= (1-d1+3e)n1, |T_r| >= (1-d1+2e)n1, |T_w| <= e n1
  bool phase3 = false;  // every successful E row correct, |U_success| >= (1-d2+3e)n2
  bool phase4 = false;  // the phase-4 grid equals the planted codeword
  bool implication_holds = true;  // phase1 && phase2 && phase3 implies phase4
};

PhaseDiagnostics phase_diagnostics(const PhaseState& state, const Grid& planted, const Rational& delta1,
                                   const Rational& delta2, const Rational& eps);

/// Lower bound on the success probability of one planted run:
/// 1 - p(e, m2) - l1 p(d1, m1)/e - l2 p(e, m2)/e, with p = 0 for full sets.
double predicted_success(const SampleSizes& sizes, double delta1, double ell1, double ell2, double eps);

struct TensorWitness {
  Grid received;                // c0 (x) r
  std::vector<Grid> codewords;  // c0 (x) c_i
  Rational max_distance;
};

/// c0 is a minimum-weight codeword; rows of R' are c0[a] r.
TensorWitness tensor_lower_witness(const LinearCode& code, std::span<const Symbol> r, const std::vector<Word>& list);

}  // namespace ldlab
