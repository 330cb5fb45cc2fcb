#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace oracle {

namespace {

std::uint64_t power(std::uint64_t b, std::uint64_t e) {
  std::uint64_t out = 1;
  while (e--) out *= b;
  return out;
}

Word message_digits(std::uint64_t idx, std::uint32_t q, std::size_t k) {
  Word d(k, 0);
  for (std::size_t i = k; i-- > 0;) {
    d[i] = static_cast<Symbol>(idx % q);
    idx /= q;
  }
  return d;
}

Word encode(const LinearCode& code, const Word& msg) {
  const auto& f = code.field();
  const Matrix& g = code.generator();
  Word out(code.length(), 0);
  for (std::size_t j = 0; j < out.size(); ++j) {
    Symbol acc = 0;
    for (std::size_t i = 0; i < msg.size(); ++i) acc = f.add(acc, f.mul(msg[i], g(i, j)));
    out[j] = acc;
  }
  return out;
}

std::int64_t errors(const Word& a, const Word& b) {
  std::int64_t e = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!ldlab::is_erased(a[i]) && !ldlab::is_erased(b[i]) && a[i] != b[i]) ++e;
  return e;
}

}  // namespace

std::vector<Word> all_codewords(const LinearCode& code) {
  const std::uint64_t total = power(code.field().order(), code.dimension());
  std::vector<Word> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx)
    out.push_back(encode(code, message_digits(idx, code.field().order(), code.dimension())));
  return out;
}

std::vector<Word> ball(const LinearCode& code, const Word& r, std::int64_t radius) {
  std::vector<Word> out;
  for (const Word& c : all_codewords(code))
    if (errors(c, r) <= radius) out.push_back(c);
  return out;
}

std::size_t max_list_size(const LinearCode& code, std::int64_t radius, std::uint64_t seed) {
  const auto words = all_codewords(code);
  const std::uint32_t q = code.field().order();
  const std::size_t n = code.length();
  auto count = [&](const Word& r) {
    std::size_t c = 0;
    for (const Word& w : words)
      if (errors(w, r) <= radius) ++c;
    return c;
  };
  std::size_t best = 0;
  if (power(q, n) <= (1u << 16) && n <= 16) {
    const std::uint64_t total = power(q, n);
    for (std::uint64_t idx = 0; idx < total; ++idx) best = std::max(best, count(message_digits(idx, q, n)));
    return best;
  }
  ldlab::Rng rng(seed);
  for (int t = 0; t < 1000; ++t) best = std::max(best, count(ldlab::random_word(code.field(), n, rng)));
  for (const Word& w : words)
    for (std::size_t i = 0; i < n; ++i) {
      Word r = w;
      r[i] = static_cast<Symbol>((r[i] + 1) % q);
      best = std::max(best, count(r));
    }
  return best;
}

std::vector<Grid> interleaved_ball(const LinearCode& base, std::size_t m, const Grid& r, std::int64_t radius) {
  const auto words = all_codewords(base);
  const std::size_t n = base.length();
  std::vector<Grid> out;
  std::vector<std::size_t> pick(m, 0);
  for (;;) {
    std::int64_t bad = 0;
    for (std::size_t row = 0; row < n && bad <= radius; ++row) {
      bool err = false;
      for (std::size_t c = 0; c < m; ++c) {
        const Symbol rv = r(row, c);
        if (!ldlab::is_erased(rv) && rv != words[pick[c]][row]) err = true;
      }
      if (err) ++bad;
    }
    if (bad <= radius) {
      Grid g(n, m);
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t row = 0; row < n; ++row) g(row, c) = words[pick[c]][row];
      out.push_back(std::move(g));
    }
    std::size_t pos = m;
    while (pos > 0 && ++pick[pos - 1] == words.size()) pick[--pos] = 0;
    if (pos == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Grid> tensor_ball(const LinearCode& c2, const LinearCode& c1, const Grid& r, std::int64_t radius) {
  const auto& f = c1.field();
  const std::size_t k1 = c1.dimension();
  const std::size_t k2 = c2.dimension();
  const std::size_t n1 = c1.length();
  const std::size_t n2 = c2.length();
  const std::uint64_t total = power(f.order(), k1 * k2);
  const auto rows1 = all_codewords(c1);
  std::vector<Grid> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    // Message matrix A (k2 x k1); codeword = G2^t A G1, built from rows of A G1.
    const Word a = message_digits(idx, f.order(), k1 * k2);
    std::vector<Word> ag(k2);
    for (std::size_t i = 0; i < k2; ++i) {
      std::uint64_t rank = 0;
      for (std::size_t j = 0; j < k1; ++j) rank = rank * f.order() + a[i * k1 + j];
      ag[i] = rows1[rank];
    }
    Grid g(n2, n1);
    std::int64_t bad = 0;
    for (std::size_t y = 0; y < n2; ++y)
      for (std::size_t x = 0; x < n1; ++x) {
        Symbol acc = 0;
        for (std::size_t i = 0; i < k2; ++i) acc = f.add(acc, f.mul(c2.generator()(i, y), ag[i][x]));
        g(y, x) = acc;
        if (!ldlab::is_erased(r(y, x)) && r(y, x) != acc) ++bad;
      }
    if (bad <= radius) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t rank(const ldlab::Field& f, Matrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Symbol factor = f.div(m(i, c), m(r, c));
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    ++r;
  }
  return r;
}

Rational ghw(const LinearCode& code, std::size_t r) {
  const auto words = all_codewords(code);
  const auto& f = code.field();
  const std::size_t n = code.length();
  std::size_t best = n;
  std::vector<std::size_t> pick(r, 1);
  if (words.size() < 2) return Rational(0);
  for (;;) {
    Matrix basis(r, n);
    for (std::size_t s = 0; s < r; ++s)
      for (std::size_t j = 0; j < n; ++j) basis(s, j) = words[pick[s]][j];
    if (oracle::rank(f, basis) == r) {
      std::size_t support = 0;
      for (std::size_t j = 0; j < n; ++j) {
        bool nz = false;
        for (std::size_t s = 0; s < r; ++s) nz = nz || basis(s, j) != 0;
        if (nz) ++support;
      }
      best = std::min(best, support);
    }
    std::size_t pos = r;
    while (pos > 0 && ++pick[pos - 1] == words.size()) pick[--pos] = 1;
    if (pos == 0) break;
  }
  return Rational(static_cast<std::int64_t>(best), static_cast<std::int64_t>(n));
}

std::vector<Matrix> lin_ball(const ldlab::ReceivedTable& received, std::int64_t radius, std::size_t max_rank) {
  const auto& f = *received.field;
  const std::size_t k = received.k;
  const std::size_t m = received.m;
  const std::uint32_t q = f.order();
  const std::size_t n = received.size();
  const std::uint64_t total = power(q, k * m);
  std::vector<Matrix> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Word cells = message_digits(idx, q, k * m);
    Matrix M(k, m);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < m; ++j) M(i, j) = cells[i * m + j];
    if (oracle::rank(f, M) > max_rank) continue;
    std::int64_t bad = 0;
    for (std::size_t x = 0; x < n && bad <= radius; ++x) {
      const Word xd = message_digits(x, q, k);
      bool err = false;
      for (std::size_t j = 0; j < m; ++j) {
        Symbol acc = 0;
        for (std::size_t i = 0; i < k; ++i) acc = f.add(acc, f.mul(xd[i], M(i, j)));
        if (received.values(x, j) != acc) err = true;
      }
      if (err) ++bad;
    }
    if (bad <= radius) out.push_back(std::move(M));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> hadamard_ball(const Word& r, std::size_t k, std::int64_t radius) {
  const std::uint64_t n = std::uint64_t{1} << k;
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 0; a < n; ++a) {
    std::int64_t bad = 0;
    for (std::uint64_t x = 0; x < n; ++x) {
      std::uint64_t bit = 0;
      for (std::size_t i = 0; i < k; ++i) bit ^= ((a >> i) & (x >> i) & 1u);
      if (ldlab::is_erased(r[x]) || r[x] != bit) ++bad;
    }
    if (bad <= radius) out.push_back(a);
  }
  return out;
}

}  // namespace oracle
