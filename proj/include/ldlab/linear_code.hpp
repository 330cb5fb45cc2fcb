#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ldlab/galois.hpp"
#include "ldlab/matrix.hpp"
#include "ldlab/rational.hpp"
#include "ldlab/rng.hpp"
#include "ldlab/word.hpp"

namespace ldlab {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

/// Enumeration cap in codewords; LDLAB_CAP overrides the default.
std::uint64_t enumeration_cap();

/// q^k, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

/// Linear code given by a full-rank k x n generator matrix.
///
/// Messages are ranked as base-q integers with the first coordinate most
/// significant; codeword enumeration and list ordering follow that rank.
/// Copies share the lazily computed minimum distance and codebook.
class LinearCode {
 public:
  LinearCode(FieldPtr field, Matrix generator, std::string tag = "custom");

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t length() const noexcept { return g_.cols(); }
  std::size_t dimension() const noexcept { return g_.rows(); }
  const Matrix& generator() const noexcept { return g_; }
  const std::string& tag() const noexcept { return tag_; }

  std::uint64_t codeword_count() const noexcept;
  /// Throws EnumerationTooLarge when q^k exceeds the cap.
  void require_enumerable() const;

  Word encode(std::span<const Symbol> message) const;
  Word message_of(std::uint64_t rank) const;
  std::uint64_t rank_of(std::span<const Symbol> message) const;

  /// Visits every codeword in message-rank order.
  void for_each_codeword(const std::function<void(std::uint64_t rank, const Word& cw)>& fn) const;

  std::size_t min_distance() const;
  Rational relative_distance() const;
  /// Lowest-rank codeword of minimum nonzero weight.
  Word min_weight_codeword() const;

  /// Membership by linear algebra (no enumeration).
  bool contains(std::span<const Symbol> word) const;
  /// Message of a codeword, or empty when word is not in the code.
  std::vector<Symbol> unencode(std::span<const Symbol> word) const;

 private:
  struct Cache;

  FieldPtr field_;
  Matrix g_;
  std::string tag_;
  std::shared_ptr<Cache> cache_;
};

/// C^{-S}: the code with positions S deleted, plus the data to lift back.
struct PuncturedCode {
  LinearCode code;
  LinearCode parent;
  std::vector<std::size_t> kept;    // surviving parent positions, ascending
  std::vector<std::size_t> erased;  // S, ascending

  Word project(std::span<const Symbol> parent_word) const;
  Word lift(std::span<const Symbol> punctured_codeword) const;
};

/// Throws TooManyErasures unless |S| < d.
PuncturedCode puncture(const LinearCode& code, std::vector<std::size_t> erased);

struct ListEntry {
  std::uint64_t message_rank = 0;
  Word codeword;
  std::size_t errors = 0;

  friend bool operator==(const ListEntry&, const ListEntry&) = default;
};
using DecodeList = std::vector<ListEntry>;

/// All codewords within `radius_errors` errors of r (erased positions of r do
/// not count), sorted by (errors, message rank). A negative radius gives an
/// empty list.
DecodeList list_decode_brute(const LinearCode& code, std::span<const Symbol> r, std::int64_t radius_errors);
DecodeList list_decode_erasures(const LinearCode& code, std::span<const Symbol> r, std::int64_t radius_errors);

enum class UniqueStatus { kUnique, kAmbiguous, kNoCodeword };

struct UniqueDecode {
  UniqueStatus status = UniqueStatus::kNoCodeword;
  Word codeword;  // set when status is kUnique
};

/// Erasure-only decoding by Gaussian elimination on the unerased columns.
UniqueDecode unique_decode_erasures(const LinearCode& code, std::span<const Symbol> r);

/// Replaces exactly error_count distinct positions with different symbols.
Word corrupt(const Field& field, std::span<const Symbol> c, std::size_t error_count, std::uint64_t seed);
Word corrupt(const Field& field, std::span<const Symbol> c, std::size_t error_count, Rng& rng);

/// Uniformly random word of length n.
Word random_word(const Field& field, std::size_t n, Rng& rng);

}  // namespace ldlab
