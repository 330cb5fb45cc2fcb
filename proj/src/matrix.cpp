#include "ldlab/matrix.hpp"

#include "ldlab/error.hpp"

namespace ldlab {

RowEchelon row_reduce(const Field& f, Matrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead_row, c));
    const Symbol scale = f.inv(m(lead_row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) = f.mul(m(lead_row, c), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col) == 0) continue;
      const Symbol factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(lead_row, c)));
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Field& f, const Matrix& m) { return row_reduce(f, m).rank(); }

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::kLengthMismatch, "matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Symbol x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
    }
  return out;
}

Matrix kronecker(const Field& f, const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = f.mul(a(i, j), b(k, l));
  return out;
}

std::vector<Symbol> vec_mul(const Field& f, std::span<const Symbol> v, const Matrix& m) {
  if (v.size() != m.rows()) throw Error(Errc::kLengthMismatch, "vector/matrix length mismatch");
  std::vector<Symbol> out(m.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const auto row = m.row(i);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(v[i], row[j]));
  }
  return out;
}

LinearSolution solve_left(const Field& f, const Matrix& a, std::span<const Symbol> b) {
  if (b.size() != a.cols()) throw Error(Errc::kLengthMismatch, "right-hand side length mismatch");
  const std::size_t k = a.rows();
  Matrix aug(a.cols(), k + 1);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < k; ++i) aug(j, i) = a(i, j);
    aug(j, k) = b[j];
  }
  const RowEchelon ech = row_reduce(f, std::move(aug));
  LinearSolution sol;
  std::size_t rank_a = 0;
  for (auto piv : ech.pivots) {
    if (piv == k) return sol;  // inconsistent
    ++rank_a;
  }
  sol.consistent = true;
  sol.nullity = k - rank_a;
  sol.particular.assign(k, 0);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) sol.particular[ech.pivots[r]] = ech.reduced(r, k);
  return sol;
}

}  // namespace ldlab
