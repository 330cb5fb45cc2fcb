#include "ldlab/word.hpp"

#include "ldlab/error.hpp"

namespace ldlab {

std::size_t erasure_count(std::span<const Symbol> w) noexcept {
  std::size_t n = 0;
  for (auto s : w) n += is_erased(s) ? 1 : 0;
  return n;
}

std::size_t weight(std::span<const Symbol> w) noexcept {
  std::size_t n = 0;
  for (auto s : w) n += (s != 0 && !is_erased(s)) ? 1 : 0;
  return n;
}

Distance distance(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.size() != b.size())
    throw Error(Errc::kLengthMismatch, "word lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  Distance d;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_erased(a[i]) || is_erased(b[i]))
      ++d.erasures;
    else if (a[i] != b[i])
      ++d.errors;
  }
  return d;
}

Rational relative_errors(std::span<const Symbol> a, std::span<const Symbol> b) {
  return Rational(static_cast<std::int64_t>(distance(a, b).errors), static_cast<std::int64_t>(a.size()));
}

Word Grid::column(std::size_t c) const {
  Word out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Grid::set_row(std::size_t r, std::span<const Symbol> values) {
  if (values.size() != cols_) throw Error(Errc::kLengthMismatch, "row length");
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = values[c];
}

void Grid::set_column(std::size_t c, std::span<const Symbol> values) {
  if (values.size() != rows_) throw Error(Errc::kLengthMismatch, "column length");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

void Grid::erase_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = kErased;
}

bool Grid::row_erased(std::size_t r) const {
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_erased((*this)(r, c))) return false;
  return cols_ > 0;
}

Grid Grid::from_flat(std::size_t rows, std::size_t cols, Word cells) {
  if (cells.size() != rows * cols) throw Error(Errc::kLengthMismatch, "grid cell count");
  Grid g;
  g.rows_ = rows;
  g.cols_ = cols;
  g.cells_ = std::move(cells);
  return g;
}

Distance row_distance(const Grid& a, const Grid& b, std::size_t prefix_cols) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::kLengthMismatch, "grid shapes differ");
  const std::size_t cols = prefix_cols == 0 ? a.cols() : prefix_cols;
  Distance d;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    bool differs = false;
    bool erased = false;
    for (std::size_t c = 0; c < cols; ++c) {
      const Symbol x = a(r, c);
      const Symbol y = b(r, c);
      if (is_erased(x) || is_erased(y))
        erased = true;
      else if (x != y)
        differs = true;
    }
    if (differs)
      ++d.errors;
    else if (erased)
      ++d.erasures;
  }
  return d;
}

std::size_t row_weight(const Grid& g) {
  std::size_t w = 0;
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c)
      if (g(r, c) != 0) {
        ++w;
        break;
      }
  return w;
}

}  // namespace ldlab
