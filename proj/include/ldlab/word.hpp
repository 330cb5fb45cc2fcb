#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "ldlab/galois.hpp"
#include "ldlab/rational.hpp"

namespace ldlab {

/// A received word, codeword or advice row: symbols, with kErased marking ⊥.
using Word = std::vector<Symbol>;

std::size_t erasure_count(std::span<const Symbol> w) noexcept;
std::size_t weight(std::span<const Symbol> w) noexcept;  // nonzero, unerased positions

/// Errors are counted only where both words are unerased and differ;
/// erasures are positions where at least one side is ⊥.
struct Distance {
  std::size_t errors = 0;
  std::size_t erasures = 0;

  friend bool operator==(const Distance&, const Distance&) = default;
};

Distance distance(std::span<const Symbol> a, std::span<const Symbol> b);
Rational relative_errors(std::span<const Symbol> a, std::span<const Symbol> b);

/// Symbol grid with rows()/cols(). Interleaved codewords are n x m (one row per
/// symbol of the big alphabet); tensor codewords are n2 x n1.
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, Symbol fill = 0) : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Symbol& operator()(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  Symbol operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

  std::span<const Symbol> row(std::size_t r) const { return {cells_.data() + r * cols_, cols_}; }
  std::span<Symbol> row(std::size_t r) { return {cells_.data() + r * cols_, cols_}; }
  Word column(std::size_t c) const;
  void set_row(std::size_t r, std::span<const Symbol> values);
  void set_column(std::size_t c, std::span<const Symbol> values);
  void erase_row(std::size_t r);
  bool row_erased(std::size_t r) const;  // every cell is ⊥

  /// Row-major flattening (the tensor-code codeword order).
  const Word& flat() const noexcept { return cells_; }
  static Grid from_flat(std::size_t rows, std::size_t cols, Word cells);

  friend bool operator==(const Grid&, const Grid&) = default;
  friend auto operator<=>(const Grid& a, const Grid& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.cells_ <=> b.cells_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Word cells_;
};

/// Row-symbol metric over the first `prefix_cols` columns: a row is an error
/// when some mutually unerased cell differs, otherwise an erasure when some
/// cell is ⊥ on either side. prefix_cols = 0 means all columns.
Distance row_distance(const Grid& a, const Grid& b, std::size_t prefix_cols = 0);

/// Number of rows that are not entirely zero.
std::size_t row_weight(const Grid& g);

}  // namespace ldlab
