#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ldlab {

/// A field element, encoded as the base-p integer of its polynomial
/// coefficients (constant term least significant). The all-ones value is
/// reserved for the erasure mark.
using Symbol = std::uint16_t;

inline constexpr Symbol kErased = 0xFFFF;
inline constexpr std::uint32_t kMaxFieldOrder = 4096;

constexpr bool is_erased(Symbol s) noexcept { return s == kErased; }

/// GF(q) for q = p^e <= 4096.
///
/// The reduction polynomial is the first monic irreducible of degree e when
/// the lower coefficients (c_{e-1}, ..., c_0) are read as a base-p integer and
/// counted upward from zero. Fields are immutable once built; share them
/// through FieldPtr.
class Field {
 public:
  explicit Field(std::uint32_t q);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return e_; }
  /// Coefficients c_0..c_e of the monic reduction polynomial (c_e = 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Symbol zero() const noexcept { return 0; }
  Symbol one() const noexcept { return 1; }
  bool contains(Symbol a) const noexcept { return a < q_; }

  Symbol add(Symbol a, Symbol b) const;
  Symbol sub(Symbol a, Symbol b) const;
  Symbol neg(Symbol a) const;
  Symbol mul(Symbol a, Symbol b) const;
  Symbol inv(Symbol a) const;
  Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }
  Symbol pow(Symbol a, std::uint64_t exponent) const;

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.q_ == b.q_; }

 private:
  Symbol poly_mul(Symbol a, Symbol b) const;
  Symbol digit_add(Symbol a, Symbol b, bool subtract) const;

  std::uint32_t q_;
  std::uint32_t p_;
  std::uint32_t e_;
  std::vector<std::uint32_t> modulus_;
  // Full tables only for q <= 256.
  std::vector<Symbol> add_table_;
  std::vector<Symbol> mul_table_;
  std::vector<Symbol> neg_table_;
  std::vector<Symbol> inv_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// field_new: builds GF(q); throws NotPrimePower / OrderTooLarge.
FieldPtr make_field(std::uint32_t q);

/// Returns (p, e) with q = p^e, or throws NotPrimePower.
std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint32_t q);

/// Monic irreducibility over GF(p) by trial division against every monic
/// polynomial of degree 1..deg/2. Coefficients are low-to-high.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace ldlab
