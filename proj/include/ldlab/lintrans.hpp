#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ldlab/families.hpp"
#include "ldlab/interleaved_decode.hpp"

namespace ldlab {

/// A linear map F_q^k -> F_q^m given by its k x m matrix; x maps to x^t M.
struct LinTransform {
  FieldPtr field;
  std::size_t k = 0;
  std::size_t m = 0;
  Matrix M;

  /// q^k x m grid; row x (base q, x_1 most significant) is x^t M. This is the
  /// Had(q, k)^{(.)m} codeword whose columns encode the columns of M.
  Grid table() const;
  std::size_t rank() const;
};

/// Received function F_q^k -> F_q^m; a row with any cell ⊥ is an erasure.
struct ReceivedTable {
  FieldPtr field;
  std::size_t k = 0;
  std::size_t m = 0;
  Grid values;  // q^k x m

  std::size_t size() const noexcept { return values.rows(); }
};

ReceivedTable make_received(const FieldPtr& field, std::size_t k, Grid values);

/// Reads M back from a table: row i of M is the value at x = e_i.
LinTransform transform_from_table(const FieldPtr& field, std::size_t k, const Grid& table);

/// Rows where R and the table of L disagree, counting erased rows of R.
std::size_t table_mismatches(const ReceivedTable& received, const LinTransform& transform);

/// M = sum_s u_s (x) v_s with u_s in F^k spanning the column space and v_s in
/// F^m spanning the row space.
struct RankDecomposition {
  std::size_t rank = 0;
  std::vector<Word> u;
  std::vector<Word> v;
};
RankDecomposition rank_decompose(const LinTransform& transform);
Matrix outer_sum(const Field& field, const RankDecomposition& dec, std::size_t k, std::size_t m);

/// wt(R, v): fraction of x with R(x) = mu v for some nonzero mu; for v = 0 the
/// fraction with R(x) = 0.
Rational weight_profile(const ReceivedTable& received, std::span<const Symbol> v);

/// Nonzero vectors b with Pr[R(x) = b] >= threshold, ascending.
std::vector<Word> frequent_vectors(const ReceivedTable& received, const Rational& threshold);
/// Nonzero directions (first nonzero coordinate 1) with projective weight >=
/// threshold, ascending.
std::vector<Word> frequent_directions(const ReceivedTable& received, const Rational& threshold);

/// True when the members of pool that lie in RowSpan(M) span RowSpan(M).
bool pool_spans_row_space(const Field& field, const Matrix& M, const std::vector<Word>& pool);

/// Hadamard codewords within max_mismatches of r, where ⊥ positions count as
/// mismatches. Entries carry message rank (hadamard() order) and mismatch
/// count in `errors`, sorted by (errors, rank). Uses a Walsh transform for q = 2.
DecodeList hadamard_ball(const FieldPtr& field, std::size_t k, std::span<const Symbol> r, std::int64_t max_mismatches);

struct HadamardErasureResult {
  DecodeList list;
  Rational erased_fraction;
  double bound = 0;           // 2 / (eta + 2 eps)^2
  bool bound_applies = true;  // false when every position is erased
  bool within_bound = true;
};

/// Binary Hadamard codewords with mismatch fraction < 1/2 - eps.
HadamardErasureResult hadamard_decode_erasures(std::span<const Symbol> r, std::size_t k, const Rational& eps);

struct LinEntry {
  Matrix M;
  std::size_t rank = 0;
  std::size_t errors = 0;  // row mismatches

  friend bool operator==(const LinEntry&, const LinEntry&) = default;
};

struct LinDecodeResult {
  std::vector<LinEntry> list;  // sorted by M
  std::int64_t budget = 0;     // max row mismatches
  std::size_t span_candidates = 0;
  std::size_t hadamard_calls = 0;
  double list_eps2 = 0;  // |list| eps^2
  double bound = 0;
  bool within_bound = true;
};

/// Rank <= 1 transforms within 1/2 - eps of R over F_2.
LinDecodeResult decode_rank1(const ReceivedTable& received, const Rational& eps);
/// Rank <= 2 transforms within 1/2 - eps of R over F_2; bound is 101/eps^2.
LinDecodeResult decode_rank2(const ReceivedTable& received, const Rational& eps);
/// Rank <= 1 transforms within 1 - 1/q - eps over any F_q; bound is eps^-3.
LinDecodeResult decode_rank1_q(const ReceivedTable& received, const Rational& eps);

struct FullDecodeResult {
  LinDecodeResult result;
  NaiveCounters counters;
  std::size_t rank_le2 = 0;
  bool rank2_checked = false;  // q = 2 only
  bool rank2_consistent = true;
};

/// Every transform within 1 - 1/q - eps, by column-wise decoding of the
/// interleaved Hadamard code. Over F_2 the rank <= 2 part is compared with
/// decode_rank2.
FullDecodeResult decode_full(const ReceivedTable& received, const Rational& eps);

LinTransform random_transform(const FieldPtr& field, std::size_t k, std::size_t m, Rng& rng);
/// Product of random k x r and r x m matrices, redrawn until the rank is r.
LinTransform random_transform_of_rank(const FieldPtr& field, std::size_t k, std::size_t m, std::size_t r, Rng& rng);

}  // namespace ldlab
