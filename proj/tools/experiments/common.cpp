#include "common.hpp"

#include <map>
#include <mutex>

namespace ldlab::exp {

FieldPtr gf(std::uint32_t q) {
  static std::mutex mu;
  static std::map<std::uint32_t, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[q];
  if (!slot) slot = make_field(q);
  return slot;
}

std::vector<NamedCode> interleaved_test_codes() {
  return {
      {"Had(2,2)", hadamard(gf(2), 2)},
      {"Had(2,3)", hadamard(gf(2), 3)},
      {"RS(GF(5),5,1)", reed_solomon(gf(5), {0, 1, 2, 3, 4}, 1)},
  };
}

Word random_message(const Field& f, std::size_t k, Rng& rng) {
  Word m(k);
  for (auto& s : m) s = static_cast<Symbol>(uniform_below(rng, f.order()));
  return m;
}

Word random_codeword(const LinearCode& code, Rng& rng) {
  return code.encode(random_message(code.field(), code.dimension(), rng));
}

Grid random_codeword_grid(const InterleavedCode& ic, Rng& rng) {
  std::vector<Word> msgs;
  for (std::size_t c = 0; c < ic.m(); ++c) msgs.push_back(random_message(ic.base().field(), ic.base().dimension(), rng));
  return ic.encode(msgs);
}

Grid random_grid(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Grid g(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) g(r, c) = static_cast<Symbol>(uniform_below(rng, f.order()));
  return g;
}

Grid corrupt_rows(const Field& f, Grid g, std::size_t count, Rng& rng) {
  for (std::size_t row : sample_subset(rng, g.rows(), count)) {
    Word before(g.row(row).begin(), g.row(row).end());
    for (std::size_t c = 0; c < g.cols(); ++c) g(row, c) = static_cast<Symbol>(uniform_below(rng, f.order()));
    if (std::equal(before.begin(), before.end(), g.row(row).begin())) {
      const std::size_t c = uniform_below(rng, g.cols());
      g(row, c) = static_cast<Symbol>((g(row, c) + 1 + uniform_below(rng, f.order() - 1)) % f.order());
    }
  }
  return g;
}

Grid corrupt_cells(const Field& f, Grid g, std::size_t count, Rng& rng) {
  for (std::size_t cell : sample_subset(rng, g.rows() * g.cols(), count)) {
    Symbol& s = g(cell / g.cols(), cell % g.cols());
    s = static_cast<Symbol>((s + 1 + uniform_below(rng, f.order() - 1)) % f.order());
  }
  return g;
}

std::size_t grid_rank(const Field& f, const Grid& g) {
  Matrix m(g.rows(), g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) m(r, c) = g(r, c);
  return rank(f, m);
}

}  // namespace ldlab::exp
