#include "ldlab/linear_code.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <mutex>

#include "ldlab/error.hpp"

namespace ldlab {

namespace {

constexpr std::uint64_t kCodebookCells = std::uint64_t{1} << 22;

}  // namespace

std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("LDLAB_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumerationCap;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

struct LinearCode::Cache {
  std::once_flag distance_once;
  std::size_t distance = 0;
  Word min_weight;
  std::once_flag book_once;
  std::vector<Word> book;
};

LinearCode::LinearCode(FieldPtr field, Matrix generator, std::string tag)
    : field_(std::move(field)), g_(std::move(generator)), tag_(std::move(tag)), cache_(std::make_shared<Cache>()) {
  if (g_.rows() == 0 || g_.cols() == 0) throw Error(Errc::kDomainError, "generator must be non-empty");
  for (auto s : g_.data())
    if (!field_->contains(s)) throw Error(Errc::kDomainError, "generator entry outside " + field_->describe());
  if (rank(*field_, g_) != g_.rows())
    throw Error(Errc::kRankDeficient, "generator of " + tag_ + " has rank below " + std::to_string(g_.rows()));
}

std::uint64_t LinearCode::codeword_count() const noexcept { return saturating_pow(field_->order(), dimension()); }

void LinearCode::require_enumerable() const {
  const std::uint64_t cap = enumeration_cap();
  if (codeword_count() > cap)
    throw Error(Errc::kEnumerationTooLarge, tag_ + " has more than " + std::to_string(cap) + " codewords");
}

Word LinearCode::encode(std::span<const Symbol> message) const {
  if (message.size() != dimension())
    throw Error(Errc::kLengthMismatch,
                "message length " + std::to_string(message.size()) + ", expected " + std::to_string(dimension()));
  return vec_mul(*field_, message, g_);
}

Word LinearCode::message_of(std::uint64_t rank) const {
  const std::uint32_t q = field_->order();
  Word msg(dimension(), 0);
  for (std::size_t i = dimension(); i-- > 0;) {
    msg[i] = static_cast<Symbol>(rank % q);
    rank /= q;
  }
  return msg;
}

std::uint64_t LinearCode::rank_of(std::span<const Symbol> message) const {
  std::uint64_t r = 0;
  for (auto s : message) r = r * field_->order() + s;
  return r;
}

void LinearCode::for_each_codeword(const std::function<void(std::uint64_t, const Word&)>& fn) const {
  require_enumerable();
  const std::uint64_t count = codeword_count();
  const Field& f = *field_;
  const std::size_t n = length();
  const std::size_t k = dimension();

  if (count * n <= kCodebookCells) {
    std::call_once(cache_->book_once, [&] {
      std::vector<Word>& book = cache_->book;
      book.assign(count, Word(n, 0));
      // idx = top * q^j + rest with top its leading base-q digit, which
      // multiplies generator row k-1-j; book[rest] is already filled.
      std::uint64_t block = 1;
      std::size_t row = k - 1;
      for (std::uint64_t idx = 1; idx < count; ++idx) {
        if (idx == block * f.order()) {
          block = idx;
          --row;
        }
        const auto top = static_cast<Symbol>(idx / block);
        const std::uint64_t rest = idx % block;
        const auto lead = g_.row(row);
        for (std::size_t j = 0; j < n; ++j) book[idx][j] = f.add(f.mul(top, lead[j]), book[rest][j]);
      }
    });
    for (std::uint64_t idx = 0; idx < count; ++idx) fn(idx, cache_->book[idx]);
    return;
  }

  // Odometer over messages, updating the codeword one generator row at a time.
  Word msg(k, 0);
  Word cw(n, 0);
  for (std::uint64_t idx = 0;; ++idx) {
    fn(idx, cw);
    std::size_t pos = k;
    while (pos-- > 0) {
      const Symbol old = msg[pos];
      const auto next = static_cast<Symbol>((old + 1u) % f.order());
      msg[pos] = next;
      const Symbol delta = f.sub(next, old);
      const auto row = g_.row(pos);
      for (std::size_t j = 0; j < n; ++j) cw[j] = f.add(cw[j], f.mul(delta, row[j]));
      if (next != 0) break;
    }
    if (pos == static_cast<std::size_t>(-1)) return;
  }
}

std::size_t LinearCode::min_distance() const {
  std::call_once(cache_->distance_once, [&] {
    std::size_t best = length() + 1;
    for_each_codeword([&](std::uint64_t idx, const Word& cw) {
      if (idx == 0) return;
      const std::size_t w = weight(cw);
      if (w < best) {
        best = w;
        cache_->min_weight = cw;
      }
    });
    cache_->distance = best;
  });
  return cache_->distance;
}

Rational LinearCode::relative_distance() const {
  return Rational(static_cast<std::int64_t>(min_distance()), static_cast<std::int64_t>(length()));
}

Word LinearCode::min_weight_codeword() const {
  min_distance();
  return cache_->min_weight;
}

std::vector<Symbol> LinearCode::unencode(std::span<const Symbol> word) const {
  if (word.size() != length()) throw Error(Errc::kLengthMismatch, "word length differs from code length");
  for (auto s : word)
    if (is_erased(s) || !field_->contains(s)) return {};
  const LinearSolution sol = solve_left(*field_, g_, word);
  if (!sol.consistent) return {};
  return sol.particular;
}

bool LinearCode::contains(std::span<const Symbol> word) const { return !unencode(word).empty(); }

Word PuncturedCode::project(std::span<const Symbol> parent_word) const {
  Word out;
  out.reserve(kept.size());
  for (auto i : kept) out.push_back(parent_word[i]);
  return out;
}

Word PuncturedCode::lift(std::span<const Symbol> punctured_codeword) const {
  const auto msg = code.unencode(punctured_codeword);
  if (msg.empty()) throw Error(Errc::kDomainError, "word is not a punctured codeword");
  return parent.encode(msg);
}

PuncturedCode puncture(const LinearCode& code, std::vector<std::size_t> erased) {
  std::sort(erased.begin(), erased.end());
  erased.erase(std::unique(erased.begin(), erased.end()), erased.end());
  for (auto i : erased)
    if (i >= code.length()) throw Error(Errc::kLengthMismatch, "erasure index out of range");
  if (erased.size() >= code.min_distance())
    throw Error(Errc::kTooManyErasures, std::to_string(erased.size()) + " erasures with d=" +
                                            std::to_string(code.min_distance()));
  std::vector<std::size_t> kept;
  for (std::size_t i = 0, e = 0; i < code.length(); ++i) {
    if (e < erased.size() && erased[e] == i) {
      ++e;
      continue;
    }
    kept.push_back(i);
  }
  Matrix g(code.dimension(), kept.size());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < kept.size(); ++c) g(r, c) = code.generator()(r, kept[c]);
  std::string tag = code.tag() + " punctured " + std::to_string(erased.size());
  return PuncturedCode{LinearCode(code.field_ptr(), std::move(g), std::move(tag)), code, std::move(kept),
                       std::move(erased)};
}

DecodeList list_decode_erasures(const LinearCode& code, std::span<const Symbol> r, std::int64_t radius_errors) {
  if (r.size() != code.length()) throw Error(Errc::kLengthMismatch, "received word length differs from code length");
  code.require_enumerable();
  DecodeList out;
  if (radius_errors < 0) return out;
  const auto radius = static_cast<std::size_t>(radius_errors);
  code.for_each_codeword([&](std::uint64_t rank, const Word& cw) {
    std::size_t errors = 0;
    for (std::size_t i = 0; i < cw.size() && errors <= radius; ++i)
      if (!is_erased(r[i]) && r[i] != cw[i]) ++errors;
    if (errors <= radius) out.push_back(ListEntry{rank, cw, errors});
  });
  std::stable_sort(out.begin(), out.end(), [](const ListEntry& a, const ListEntry& b) { return a.errors < b.errors; });
  return out;
}

DecodeList list_decode_brute(const LinearCode& code, std::span<const Symbol> r, std::int64_t radius_errors) {
  return list_decode_erasures(code, r, radius_errors);
}

UniqueDecode unique_decode_erasures(const LinearCode& code, std::span<const Symbol> r) {
  if (r.size() != code.length()) throw Error(Errc::kLengthMismatch, "received word length differs from code length");
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!is_erased(r[i])) cols.push_back(i);
  Matrix sub(code.dimension(), cols.size());
  Word rhs(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t row = 0; row < sub.rows(); ++row) sub(row, c) = code.generator()(row, cols[c]);
    rhs[c] = r[cols[c]];
  }
  const LinearSolution sol = solve_left(code.field(), sub, rhs);
  UniqueDecode out;
  if (!sol.consistent) return out;
  if (sol.nullity > 0) {
    out.status = UniqueStatus::kAmbiguous;
    return out;
  }
  out.status = UniqueStatus::kUnique;
  out.codeword = code.encode(sol.particular);
  return out;
}

Word corrupt(const Field& field, std::span<const Symbol> c, std::size_t error_count, Rng& rng) {
  if (error_count > c.size()) throw Error(Errc::kDomainError, "more errors than positions");
  Word out(c.begin(), c.end());
  const std::uint32_t q = field.order();
  for (auto pos : sample_subset(rng, c.size(), error_count)) {
    if (is_erased(out[pos])) {
      out[pos] = static_cast<Symbol>(uniform_below(rng, q));
      continue;
    }
    auto u = static_cast<Symbol>(uniform_below(rng, q - 1));
    if (u >= out[pos]) ++u;
    out[pos] = u;
  }
  return out;
}

Word corrupt(const Field& field, std::span<const Symbol> c, std::size_t error_count, std::uint64_t seed) {
  Rng rng(seed);
  return corrupt(field, c, error_count, rng);
}

Word random_word(const Field& field, std::size_t n, Rng& rng) {
  Word w(n);
  for (auto& s : w) s = static_cast<Symbol>(uniform_below(rng, field.order()));
  return w;
}

}  // namespace ldlab
