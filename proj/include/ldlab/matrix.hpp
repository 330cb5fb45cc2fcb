#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ldlab/galois.hpp"

namespace ldlab {

/// Dense row-major matrix of field symbols.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Symbol fill = 0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Symbol& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Symbol operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Symbol> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Symbol> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  const std::vector<Symbol>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Symbol> data_;
};

struct RowEchelon {
  Matrix reduced;                   // reduced row-echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const noexcept { return pivots.size(); }
};

RowEchelon row_reduce(const Field& f, Matrix m);
std::size_t rank(const Field& f, const Matrix& m);
Matrix transpose(const Matrix& m);
Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Matrix kronecker(const Field& f, const Matrix& a, const Matrix& b);
/// v * M for a row vector v of length M.rows().
std::vector<Symbol> vec_mul(const Field& f, std::span<const Symbol> v, const Matrix& m);

/// Solution set of x * A = b (A is k x n, b has length n).
struct LinearSolution {
  bool consistent = false;
  std::vector<Symbol> particular;  // valid when consistent
  std::size_t nullity = 0;         // dimension of the solution space
};
LinearSolution solve_left(const Field& f, const Matrix& a, std::span<const Symbol> b);

}  // namespace ldlab
