#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ldlab/linear_code.hpp"

namespace ldlab {

/// Had(q, k): length q^k, position x (base-q, x_1 most significant) holds a.x.
LinearCode hadamard(const FieldPtr& field, std::size_t k);

/// Evaluations of polynomials of degree <= degree_bound on eval_points.
/// Dimension is degree_bound + 1 and distance is n - degree_bound.
LinearCode reed_solomon(const FieldPtr& field, const std::vector<Symbol>& eval_points, std::size_t degree_bound);

/// C2 (x) C1 with generator kron(G2, G1). Codewords flatten n2 x n1 matrices
/// row-major: rows are C1 codewords and columns are C2 codewords.
LinearCode tensor(const LinearCode& c2, const LinearCode& c1);

/// The length-1 dimension-1 code, the identity for tensor().
LinearCode trivial_code(const FieldPtr& field);

/// View a flat tensor codeword as an n2 x n1 grid, and back.
Grid as_tensor_grid(std::span<const Symbol> flat, std::size_t n2, std::size_t n1);

/// Row/column membership check for tensor codewords.
bool is_tensor_codeword(const LinearCode& c2, const LinearCode& c1, const Grid& g);

/// C^{(.)m}: codewords are n x m grids whose columns are base codewords; each
/// row is one symbol over an alphabet of size q^m.
class InterleavedCode {
 public:
  InterleavedCode(LinearCode base, std::size_t m);

  const LinearCode& base() const noexcept { return base_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t length() const noexcept { return base_.length(); }
  std::size_t min_distance() const { return base_.min_distance(); }
  Rational relative_distance() const { return base_.relative_distance(); }

  Grid encode(const std::vector<Word>& messages) const;
  Grid from_columns(const std::vector<Word>& codewords) const;
  bool contains(const Grid& g) const;
  std::uint64_t codeword_count() const;
  /// Visits every codeword grid; columns iterate in base message-rank order,
  /// last column fastest.
  void for_each_codeword(const std::function<void(const Grid&)>& fn) const;

 private:
  LinearCode base_;
  std::size_t m_;
};

/// True iff `word` (length q^{mk}, block x^{(1)} most significant) is linear in
/// each block x^{(i)} in F_q^k when the other blocks are fixed.
bool is_block_linear(const Field& field, std::span<const Symbol> word, std::size_t m, std::size_t k);

}  // namespace ldlab
