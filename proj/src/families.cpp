#include "ldlab/families.hpp"

#include <algorithm>

#include "ldlab/error.hpp"

namespace ldlab {

LinearCode hadamard(const FieldPtr& field, std::size_t k) {
  const std::uint32_t q = field->order();
  const std::uint64_t n = saturating_pow(q, k);
  if (k == 0 || n > enumeration_cap())
    throw Error(Errc::kEnumerationTooLarge, "Hadamard length q^k exceeds the enumeration cap");
  Matrix g(k, n);
  for (std::uint64_t x = 0; x < n; ++x) {
    std::uint64_t rest = x;
    for (std::size_t i = k; i-- > 0;) {
      g(i, x) = static_cast<Symbol>(rest % q);
      rest /= q;
    }
  }
  return LinearCode(field, std::move(g), "hadamard(q=" + std::to_string(q) + ",k=" + std::to_string(k) + ")");
}

LinearCode reed_solomon(const FieldPtr& field, const std::vector<Symbol>& eval_points, std::size_t degree_bound) {
  std::vector<Symbol> sorted = eval_points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(Errc::kDuplicateEvalPoints, "evaluation points must be distinct");
  for (auto a : eval_points)
    if (!field->contains(a)) throw Error(Errc::kDomainError, "evaluation point outside " + field->describe());
  const std::size_t n = eval_points.size();
  if (degree_bound >= n)
    throw Error(Errc::kDegreeTooLarge, "degree bound " + std::to_string(degree_bound) + " >= n=" + std::to_string(n));
  Matrix g(degree_bound + 1, n);
  for (std::size_t j = 0; j < n; ++j) {
    Symbol power = 1;
    for (std::size_t i = 0; i <= degree_bound; ++i) {
      g(i, j) = power;
      power = field->mul(power, eval_points[j]);
    }
  }
  return LinearCode(field, std::move(g),
                    "reed_solomon(q=" + std::to_string(field->order()) + ",n=" + std::to_string(n) +
                        ",degree_bound=" + std::to_string(degree_bound) + ",dim=" + std::to_string(degree_bound + 1) +
                        ")");
}

LinearCode tensor(const LinearCode& c2, const LinearCode& c1) {
  if (!(c2.field() == c1.field())) throw Error(Errc::kFieldMismatch, "tensor factors over different fields");
  return LinearCode(c1.field_ptr(), kronecker(c1.field(), c2.generator(), c1.generator()),
                    "tensor(" + c2.tag() + "," + c1.tag() + ")");
}

LinearCode trivial_code(const FieldPtr& field) { return LinearCode(field, Matrix(1, 1, 1), "trivial"); }

Grid as_tensor_grid(std::span<const Symbol> flat, std::size_t n2, std::size_t n1) {
  return Grid::from_flat(n2, n1, Word(flat.begin(), flat.end()));
}

bool is_tensor_codeword(const LinearCode& c2, const LinearCode& c1, const Grid& g) {
  if (g.rows() != c2.length() || g.cols() != c1.length()) return false;
  for (std::size_t r = 0; r < g.rows(); ++r)
    if (!c1.contains(g.row(r))) return false;
  for (std::size_t c = 0; c < g.cols(); ++c)
    if (!c2.contains(g.column(c))) return false;
  return true;
}

InterleavedCode::InterleavedCode(LinearCode base, std::size_t m) : base_(std::move(base)), m_(m) {
  if (m_ == 0) throw Error(Errc::kDomainError, "interleaving multiplicity must be at least 1");
}

Grid InterleavedCode::from_columns(const std::vector<Word>& codewords) const {
  if (codewords.size() != m_) throw Error(Errc::kLengthMismatch, "expected one codeword per column");
  Grid g(length(), m_);
  for (std::size_t c = 0; c < m_; ++c) g.set_column(c, codewords[c]);
  return g;
}

Grid InterleavedCode::encode(const std::vector<Word>& messages) const {
  if (messages.size() != m_) throw Error(Errc::kLengthMismatch, "expected one message per column");
  std::vector<Word> cols;
  cols.reserve(m_);
  for (const auto& msg : messages) cols.push_back(base_.encode(msg));
  return from_columns(cols);
}

bool InterleavedCode::contains(const Grid& g) const {
  if (g.rows() != length() || g.cols() != m_) return false;
  for (std::size_t c = 0; c < m_; ++c)
    if (!base_.contains(g.column(c))) return false;
  return true;
}

std::uint64_t InterleavedCode::codeword_count() const { return saturating_pow(base_.codeword_count(), m_); }

void InterleavedCode::for_each_codeword(const std::function<void(const Grid&)>& fn) const {
  if (codeword_count() > enumeration_cap())
    throw Error(Errc::kEnumerationTooLarge, "interleaved code has too many codewords");
  std::vector<Word> book;
  base_.for_each_codeword([&](std::uint64_t, const Word& cw) { book.push_back(cw); });
  std::vector<std::size_t> idx(m_, 0);
  Grid g(length(), m_);
  for (std::size_t c = 0; c < m_; ++c) g.set_column(c, book[0]);
  while (true) {
    fn(g);
    std::size_t pos = m_;
    while (pos-- > 0) {
      idx[pos] = (idx[pos] + 1) % book.size();
      g.set_column(pos, book[idx[pos]]);
      if (idx[pos] != 0) break;
    }
    if (pos == static_cast<std::size_t>(-1)) return;
  }
}

bool is_block_linear(const Field& field, std::span<const Symbol> word, std::size_t m, std::size_t k) {
  const std::uint32_t q = field.order();
  const std::uint64_t block = saturating_pow(q, k);
  const std::uint64_t total = saturating_pow(block, m);
  if (word.size() != total) throw Error(Errc::kLengthMismatch, "word length must be q^{mk}");
  std::vector<std::uint64_t> unit(k);  // index of e_j inside one block
  for (std::size_t j = 0; j < k; ++j) unit[j] = saturating_pow(q, k - 1 - j);

  for (std::size_t axis = 0; axis < m; ++axis) {
    const std::uint64_t stride = saturating_pow(block, m - 1 - axis);
    for (std::uint64_t base = 0; base < total; ++base) {
      if ((base / stride) % block != 0) continue;  // enumerate fixings with axis block = 0
      if (word[base] != 0) return false;
      for (std::uint64_t y = 1; y < block; ++y) {
        Symbol expect = 0;
        std::uint64_t rest = y;
        for (std::size_t j = k; j-- > 0;) {
          const auto digit = static_cast<Symbol>(rest % q);
          rest /= q;
          if (digit != 0) expect = field.add(expect, field.mul(digit, word[base + unit[j] * stride]));
        }
        if (word[base + y * stride] != expect) return false;
      }
    }
  }
  return true;
}

}  // namespace ldlab
