#include "ldlab/lintrans.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "ldlab/error.hpp"

namespace ldlab {

namespace {

// Base-q digits of value, most significant first.
Word digits_msb(std::uint64_t value, std::uint32_t q, std::size_t k) {
  Word out(k, 0);
  for (std::size_t i = k; i-- > 0;) {
    out[i] = static_cast<Symbol>(value % q);
    value /= q;
  }
  return out;
}

bool row_has_erasure(std::span<const Symbol> row) {
  return std::any_of(row.begin(), row.end(), is_erased);
}

bool row_is_zero(std::span<const Symbol> row) {
  return std::all_of(row.begin(), row.end(), [](Symbol s) { return s == 0; });
}

// Scales row so its first nonzero entry is 1; empty for the zero row.
Word normalize(const Field& f, std::span<const Symbol> row) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 0) continue;
    const Symbol s = f.inv(row[j]);
    Word out(row.size());
    for (std::size_t t = 0; t < row.size(); ++t) out[t] = f.mul(row[t], s);
    return out;
  }
  return {};
}

// mu with row = mu * v for nonzero mu, or 0 when there is none. v is nonzero.
Symbol multiple_of(const Field& f, std::span<const Symbol> row, std::span<const Symbol> v) {
  std::size_t j0 = 0;
  while (v[j0] == 0) ++j0;
  if (row[j0] == 0) return 0;
  const Symbol mu = f.div(row[j0], v[j0]);
  for (std::size_t j = 0; j < v.size(); ++j)
    if (row[j] != f.mul(mu, v[j])) return 0;
  return mu;
}

std::size_t table_rows(const Field& f, std::size_t k) {
  const std::uint64_t n = saturating_pow(f.order(), k);
  if (n > enumeration_cap()) throw Error(Errc::kEnumerationTooLarge, "q^k exceeds the enumeration cap");
  return static_cast<std::size_t>(n);
}

void require_positive(const Rational& eps) {
  if (eps <= Rational(0)) throw Error(Errc::kDomainError, "eps must be positive");
}

void require_binary(const ReceivedTable& r) {
  if (r.field->order() != 2) throw Error(Errc::kDomainError, "decoder is defined over GF(2)");
}

Rational radius_for(const Field& f, const Rational& eps) {
  const auto q = static_cast<std::int64_t>(f.order());
  return Rational(q - 1, q) - eps;
}

// Rank-one transform a (x) v.
Matrix outer(const Field& f, std::span<const Symbol> a, std::span<const Symbol> v) {
  Matrix M(a.size(), v.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) M(i, j) = f.mul(a[i], v[j]);
  return M;
}

Matrix add(const Field& f, const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.add(a(i, j), b(i, j));
  return out;
}

using Collected = std::map<Matrix, LinEntry>;

void offer(Collected& out, const ReceivedTable& r, Matrix M, std::int64_t budget) {
  if (out.count(M)) return;
  LinTransform t{r.field, r.k, r.m, std::move(M)};
  const std::size_t errs = table_mismatches(r, t);
  if (static_cast<std::int64_t>(errs) > budget) return;
  LinEntry e{t.M, t.rank(), errs};
  out.emplace(std::move(t.M), std::move(e));
}

LinDecodeResult finish(Collected&& found, const Rational& eps) {
  LinDecodeResult res;
  res.list.reserve(found.size());
  for (auto& [M, e] : found) res.list.push_back(std::move(e));
  res.list_eps2 = static_cast<double>(res.list.size()) * eps.to_double() * eps.to_double();
  return res;
}

LinDecodeResult rank1_core(const ReceivedTable& r, const Rational& eps) {
  require_positive(eps);
  const Field& f = *r.field;
  const std::size_t n = r.size();
  const std::int64_t budget = max_count_at_most(radius_for(f, eps) * Rational(static_cast<std::int64_t>(n)));
  Collected found;
  std::size_t calls = 0;
  const auto dirs = frequent_directions(r, eps);
  if (budget >= 0) {
    offer(found, r, Matrix(r.k, r.m), budget);
    for (const Word& v : dirs) {
      Word word(n);
      for (std::size_t x = 0; x < n; ++x) {
        const auto row = r.values.row(x);
        if (row_has_erasure(row)) {
          word[x] = kErased;
        } else if (row_is_zero(row)) {
          word[x] = 0;
        } else {
          const Symbol mu = multiple_of(f, row, v);
          word[x] = mu == 0 ? kErased : mu;
        }
      }
      ++calls;
      for (const ListEntry& e : hadamard_ball(r.field, r.k, word, budget)) {
        if (e.message_rank == 0) continue;
        offer(found, r, outer(f, digits_msb(e.message_rank, f.order(), r.k), v), budget);
      }
    }
  }
  LinDecodeResult res = finish(std::move(found), eps);
  res.budget = budget;
  res.span_candidates = dirs.size();
  res.hadamard_calls = calls;
  return res;
}

}  // namespace

Grid LinTransform::table() const {
  const Field& f = *field;
  const std::size_t n = table_rows(f, k);
  Grid g(n, m, 0);
  for (std::size_t x = 0; x < n; ++x) {
    const Word d = digits_msb(x, f.order(), k);
    const Word row = vec_mul(f, d, M);
    g.set_row(x, row);
  }
  return g;
}

std::size_t LinTransform::rank() const { return ldlab::rank(*field, M); }

ReceivedTable make_received(const FieldPtr& field, std::size_t k, Grid values) {
  const std::size_t n = table_rows(*field, k);
  if (values.rows() != n) throw Error(Errc::kLengthMismatch, "received table must have q^k rows");
  for (Symbol s : values.flat())
    if (!is_erased(s) && !field->contains(s)) throw Error(Errc::kDomainError, "symbol outside the field");
  const std::size_t m = values.cols();
  return ReceivedTable{field, k, m, std::move(values)};
}

LinTransform transform_from_table(const FieldPtr& field, std::size_t k, const Grid& table) {
  const std::size_t n = table_rows(*field, k);
  if (table.rows() != n) throw Error(Errc::kLengthMismatch, "table must have q^k rows");
  LinTransform t{field, k, table.cols(), Matrix(k, table.cols())};
  std::uint64_t idx = n;
  for (std::size_t i = 0; i < k; ++i) {
    idx /= field->order();
    const auto row = table.row(idx);
    for (std::size_t j = 0; j < t.m; ++j) t.M(i, j) = row[j];
  }
  return t;
}

std::size_t table_mismatches(const ReceivedTable& received, const LinTransform& transform) {
  if (received.k != transform.k || received.m != transform.m)
    throw Error(Errc::kLengthMismatch, "transform and table shapes differ");
  const Field& f = *received.field;
  std::size_t count = 0;
  for (std::size_t x = 0; x < received.size(); ++x) {
    const auto row = received.values.row(x);
    if (row_has_erasure(row)) {
      ++count;
      continue;
    }
    const Word value = vec_mul(f, digits_msb(x, f.order(), received.k), transform.M);
    if (!std::equal(row.begin(), row.end(), value.begin())) ++count;
  }
  return count;
}

RankDecomposition rank_decompose(const LinTransform& transform) {
  const RowEchelon ech = row_reduce(*transform.field, transform.M);
  RankDecomposition dec;
  dec.rank = ech.rank();
  for (std::size_t s = 0; s < dec.rank; ++s) {
    const auto vrow = ech.reduced.row(s);
    dec.v.emplace_back(vrow.begin(), vrow.end());
    Word col(transform.k);
    for (std::size_t i = 0; i < transform.k; ++i) col[i] = transform.M(i, ech.pivots[s]);
    dec.u.push_back(std::move(col));
  }
  return dec;
}

Matrix outer_sum(const Field& field, const RankDecomposition& dec, std::size_t k, std::size_t m) {
  Matrix M(k, m);
  for (std::size_t s = 0; s < dec.rank; ++s) M = add(field, M, outer(field, dec.u[s], dec.v[s]));
  return M;
}

Rational weight_profile(const ReceivedTable& received, std::span<const Symbol> v) {
  if (v.size() != received.m) throw Error(Errc::kLengthMismatch, "vector length must equal m");
  const Field& f = *received.field;
  const bool zero = row_is_zero(v);
  std::int64_t count = 0;
  for (std::size_t x = 0; x < received.size(); ++x) {
    const auto row = received.values.row(x);
    if (row_has_erasure(row)) continue;
    if (zero ? row_is_zero(row) : multiple_of(f, row, v) != 0) ++count;
  }
  return Rational(count, static_cast<std::int64_t>(received.size()));
}

std::vector<Word> frequent_vectors(const ReceivedTable& received, const Rational& threshold) {
  std::map<Word, std::int64_t> counts;
  for (std::size_t x = 0; x < received.size(); ++x) {
    const auto row = received.values.row(x);
    if (row_has_erasure(row) || row_is_zero(row)) continue;
    ++counts[Word(row.begin(), row.end())];
  }
  const Rational need = threshold * Rational(static_cast<std::int64_t>(received.size()));
  std::vector<Word> out;
  for (const auto& [v, c] : counts)
    if (Rational(c) >= need) out.push_back(v);
  return out;
}

std::vector<Word> frequent_directions(const ReceivedTable& received, const Rational& threshold) {
  const Field& f = *received.field;
  std::map<Word, std::int64_t> counts;
  for (std::size_t x = 0; x < received.size(); ++x) {
    const auto row = received.values.row(x);
    if (row_has_erasure(row) || row_is_zero(row)) continue;
    ++counts[normalize(f, row)];
  }
  const Rational need = threshold * Rational(static_cast<std::int64_t>(received.size()));
  std::vector<Word> out;
  for (const auto& [v, c] : counts)
    if (Rational(c) >= need) out.push_back(v);
  return out;
}

bool pool_spans_row_space(const Field& field, const Matrix& M, const std::vector<Word>& pool) {
  const std::size_t r = rank(field, M);
  std::vector<Word> inside;
  for (const Word& b : pool) {
    Matrix ext(M.rows() + 1, M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
      for (std::size_t j = 0; j < M.cols(); ++j) ext(i, j) = M(i, j);
    for (std::size_t j = 0; j < M.cols(); ++j) ext(M.rows(), j) = b[j];
    if (rank(field, ext) == r) inside.push_back(b);
  }
  if (inside.empty()) return r == 0;
  Matrix stack(inside.size(), M.cols());
  for (std::size_t i = 0; i < inside.size(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) stack(i, j) = inside[i][j];
  return rank(field, stack) == r;
}

DecodeList hadamard_ball(const FieldPtr& field, std::size_t k, std::span<const Symbol> r, std::int64_t max_mismatches) {
  const std::size_t n = table_rows(*field, k);
  if (r.size() != n) throw Error(Errc::kLengthMismatch, "received word must have length q^k");
  if (max_mismatches < 0) return {};
  const auto erasures = static_cast<std::int64_t>(erasure_count(r));
  if (field->order() != 2) {
    DecodeList out = list_decode_erasures(hadamard(field, k), r, max_mismatches - erasures);
    for (ListEntry& e : out) e.errors += static_cast<std::size_t>(erasures);
    return out;
  }
  // Walsh transform of +1 (bit 0), -1 (bit 1), 0 (erased): F[a] = agree - disagree.
  std::vector<std::int64_t> w(n);
  for (std::size_t x = 0; x < n; ++x) w[x] = is_erased(r[x]) ? 0 : (r[x] == 0 ? 1 : -1);
  for (std::size_t h = 1; h < n; h <<= 1)
    for (std::size_t i = 0; i < n; i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t a = w[j];
        const std::int64_t b = w[j + h];
        w[j] = a + b;
        w[j + h] = a - b;
      }
  DecodeList out;
  const auto unerased = static_cast<std::int64_t>(n) - erasures;
  for (std::size_t a = 0; a < n; ++a) {
    const std::int64_t mism = (unerased - w[a]) / 2 + erasures;
    if (mism > max_mismatches) continue;
    ListEntry e;
    e.message_rank = a;
    e.errors = static_cast<std::size_t>(mism);
    e.codeword.resize(n);
    for (std::size_t x = 0; x < n; ++x) e.codeword[x] = static_cast<Symbol>(std::popcount(a & x) & 1);
    out.push_back(std::move(e));
  }
  std::stable_sort(out.begin(), out.end(), [](const ListEntry& a, const ListEntry& b) { return a.errors < b.errors; });
  return out;
}

HadamardErasureResult hadamard_decode_erasures(std::span<const Symbol> r, std::size_t k, const Rational& eps) {
  require_positive(eps);
  static const FieldPtr f2 = make_field(2);
  const auto n = static_cast<std::int64_t>(table_rows(*f2, k));
  HadamardErasureResult res;
  res.list = hadamard_ball(f2, k, r, max_count_below((Rational(1, 2) - eps) * Rational(n)));
  const auto erasures = static_cast<std::int64_t>(erasure_count(r));
  res.erased_fraction = Rational(erasures, n);
  const double s = res.erased_fraction.to_double() + 2 * eps.to_double();
  res.bound = 2.0 / (s * s);
  res.bound_applies = erasures < n;
  res.within_bound = !res.bound_applies || static_cast<double>(res.list.size()) <= res.bound * (1 + 1e-12);
  return res;
}

LinDecodeResult decode_rank1(const ReceivedTable& received, const Rational& eps) {
  require_binary(received);
  LinDecodeResult res = rank1_core(received, eps);
  const double e = eps.to_double();
  res.bound = 1.0 / (2 * e * e);
  res.within_bound = static_cast<double>(res.list.size()) <= res.bound * (1 + 1e-12);
  return res;
}

LinDecodeResult decode_rank1_q(const ReceivedTable& received, const Rational& eps) {
  LinDecodeResult res = rank1_core(received, eps);
  const double e = eps.to_double();
  res.bound = 1.0 / (e * e * e);
  res.within_bound = static_cast<double>(res.list.size()) <= res.bound * (1 + 1e-12);
  return res;
}

LinDecodeResult decode_rank2(const ReceivedTable& received, const Rational& eps) {
  require_binary(received);
  require_positive(eps);
  const Field& f = *received.field;
  const std::size_t n = received.size();
  const LinDecodeResult low = rank1_core(received, eps);
  const std::int64_t budget = low.budget;
  Collected found;
  for (const LinEntry& e : low.list) found.emplace(e.M, e);
  std::size_t calls = low.hadamard_calls;
  std::size_t pairs = 0;

  const auto pool = frequent_vectors(received, eps / Rational(2));
  if (budget >= 0) {
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        ++pairs;
        const Word& u = pool[i];
        const Word& v = pool[j];
        Word uv(received.m);
        for (std::size_t t = 0; t < received.m; ++t) uv[t] = f.add(u[t], v[t]);
        Word r1(n, kErased);
        Word r2(n, kErased);
        for (std::size_t x = 0; x < n; ++x) {
          const auto row = received.values.row(x);
          if (row_has_erasure(row)) continue;
          const Word value(row.begin(), row.end());
          if (row_is_zero(row)) {
            r1[x] = 0, r2[x] = 0;
          } else if (value == u) {
            r1[x] = 1, r2[x] = 0;
          } else if (value == v) {
            r1[x] = 0, r2[x] = 1;
          } else if (value == uv) {
            r1[x] = 1, r2[x] = 1;
          }
        }
        ++calls;
        for (const ListEntry& first : hadamard_ball(received.field, received.k, r1, budget)) {
          // Erase where the first column disagrees, then decode the second.
          Word second = r2;
          for (std::size_t x = 0; x < n; ++x)
            if (!is_erased(r1[x]) && r1[x] != first.codeword[x]) second[x] = kErased;
          ++calls;
          const Word a1 = digits_msb(first.message_rank, 2, received.k);
          for (const ListEntry& e : hadamard_ball(received.field, received.k, second, budget)) {
            const Word a2 = digits_msb(e.message_rank, 2, received.k);
            offer(found, received, add(f, outer(f, a1, u), outer(f, a2, v)), budget);
          }
        }
      }
  }
  LinDecodeResult res = finish(std::move(found), eps);
  res.budget = budget;
  res.span_candidates = pairs;
  res.hadamard_calls = calls;
  const double e = eps.to_double();
  res.bound = 101.0 / (e * e);
  res.within_bound = static_cast<double>(res.list.size()) <= res.bound * (1 + 1e-12);
  return res;
}

FullDecodeResult decode_full(const ReceivedTable& received, const Rational& eps) {
  require_positive(eps);
  const Field& f = *received.field;
  const Rational radius = radius_for(f, eps);
  const std::int64_t budget = max_count_at_most(radius * Rational(static_cast<std::int64_t>(received.size())));
  const InterleavedCode ic(hadamard(received.field, received.k), received.m);
  FullDecodeResult out;
  Collected found;
  if (budget >= 0) {
    NaiveResult naive = decode_naive(ic, received.values, radius);
    out.counters = naive.counters;
    for (const Grid& g : naive.list) offer(found, received, transform_from_table(received.field, received.k, g).M, budget);
  }
  out.result = finish(std::move(found), eps);
  out.result.budget = budget;
  out.result.hadamard_calls = out.counters.oracle_calls;
  for (const LinEntry& e : out.result.list)
    if (e.rank <= 2) ++out.rank_le2;
  if (f.order() == 2) {
    out.rank2_checked = true;
    const LinDecodeResult r2 = decode_rank2(received, eps);
    std::vector<Matrix> mine;
    for (const LinEntry& e : out.result.list)
      if (e.rank <= 2) mine.push_back(e.M);
    std::vector<Matrix> theirs;
    for (const LinEntry& e : r2.list) theirs.push_back(e.M);
    out.rank2_consistent = mine == theirs;
  }
  return out;
}

LinTransform random_transform(const FieldPtr& field, std::size_t k, std::size_t m, Rng& rng) {
  LinTransform t{field, k, m, Matrix(k, m)};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m; ++j) t.M(i, j) = static_cast<Symbol>(uniform_below(rng, field->order()));
  return t;
}

LinTransform random_transform_of_rank(const FieldPtr& field, std::size_t k, std::size_t m, std::size_t r, Rng& rng) {
  if (r > std::min(k, m)) throw Error(Errc::kDomainError, "rank exceeds min(k, m)");
  const Field& f = *field;
  for (;;) {
    Matrix a(k, r);
    Matrix b(r, m);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < r; ++j) a(i, j) = static_cast<Symbol>(uniform_below(rng, f.order()));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < m; ++j) b(i, j) = static_cast<Symbol>(uniform_below(rng, f.order()));
    Matrix M = r == 0 ? Matrix(k, m) : multiply(f, a, b);
    if (ldlab::rank(f, M) == r) return LinTransform{field, k, m, std::move(M)};
  }
}

}  // namespace ldlab
