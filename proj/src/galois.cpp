#include "ldlab/galois.hpp"

#include <sstream>

#include "ldlab/error.hpp"

namespace ldlab {

namespace {

using Poly = std::vector<std::uint32_t>;  // low-to-high coefficients over GF(p)

Poly digits_of(std::uint32_t value, std::uint32_t p, std::uint32_t len) {
  Poly out(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    out[i] = value % p;
    value /= p;
  }
  return out;
}

std::uint32_t value_of(const Poly& digits, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
  return v;
}

// Remainder of a monic division; `divisor` must be monic.
Poly poly_mod(Poly a, const Poly& divisor, std::uint32_t p) {
  const std::size_t dd = divisor.size() - 1;
  for (std::size_t i = a.size(); i-- > dd;) {
    const std::uint32_t lead = a[i] % p;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      const std::size_t idx = i - dd + j;
      a[idx] = (a[idx] + p * p - lead * divisor[j] % p) % p;
    }
  }
  a.resize(std::min(a.size(), dd));
  return a;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint32_t q) {
  if (q < 2) throw Error(Errc::kNotPrimePower, std::to_string(q) + " is not a prime power");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1 || !is_prime(p)) throw Error(Errc::kNotPrimePower, std::to_string(q) + " is not a prime power");
  return {p, e};
}

bool is_irreducible(const Poly& poly, std::uint32_t p) {
  const std::size_t deg = poly.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint32_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t tail = 0; tail < count; ++tail) {
      Poly g = digits_of(tail, p, static_cast<std::uint32_t>(d));
      g.push_back(1);
      const Poly r = poly_mod(poly, g, p);
      bool zero = true;
      for (auto c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

Field::Field(std::uint32_t q) : q_(q) {
  if (q > kMaxFieldOrder) {
    prime_power_decompose(q);  // report NotPrimePower first when both apply
    throw Error(Errc::kOrderTooLarge, "field order " + std::to_string(q) + " exceeds " + std::to_string(kMaxFieldOrder));
  }
  std::tie(p_, e_) = prime_power_decompose(q);

  if (e_ == 1) {
    modulus_ = {0, 1};
  } else {
    std::uint32_t tails = q_;  // p^e candidate tails
    for (std::uint32_t tail = 0; tail < tails; ++tail) {
      Poly cand = digits_of(tail, p_, e_);
      cand.push_back(1);
      if (is_irreducible(cand, p_)) {
        modulus_ = std::move(cand);
        break;
      }
    }
  }

  inv_table_.assign(q_, 0);
  if (q_ <= 256) {
    add_table_.resize(q_ * q_);
    mul_table_.resize(q_ * q_);
    neg_table_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      neg_table_[a] = digit_add(0, static_cast<Symbol>(a), true);
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_table_[a * q_ + b] = digit_add(static_cast<Symbol>(a), static_cast<Symbol>(b), false);
        mul_table_[a * q_ + b] = poly_mul(static_cast<Symbol>(a), static_cast<Symbol>(b));
      }
    }
    for (std::uint32_t a = 1; a < q_; ++a)
      for (std::uint32_t b = 1; b < q_; ++b)
        if (mul_table_[a * q_ + b] == 1) {
          inv_table_[a] = static_cast<Symbol>(b);
          break;
        }
    for (std::uint32_t a = 1; a < q_; ++a)
      if (inv_table_[a] == 0 || mul_table_[a * q_ + inv_table_[a]] != 1)
        throw Error(Errc::kDomainError, "reduction polynomial does not give a field for q=" + std::to_string(q_));
  } else {
    for (std::uint32_t a = 1; a < q_; ++a) inv_table_[a] = pow(static_cast<Symbol>(a), q_ - 2);
  }
}

Symbol Field::digit_add(Symbol a, Symbol b, bool subtract) const {
  if (p_ == 2) return static_cast<Symbol>(a ^ b);
  if (e_ == 1) return static_cast<Symbol>(subtract ? (a + p_ - b) % p_ : (a + b) % p_);
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  std::uint32_t x = a;
  std::uint32_t y = b;
  for (std::uint32_t i = 0; i < e_; ++i) {
    const std::uint32_t da = x % p_;
    const std::uint32_t db = y % p_;
    out += scale * (subtract ? (da + p_ - db) % p_ : (da + db) % p_);
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return static_cast<Symbol>(out);
}

Symbol Field::poly_mul(Symbol a, Symbol b) const {
  if (e_ == 1) return static_cast<Symbol>((std::uint32_t{a} * b) % p_);
  const Poly x = digits_of(a, p_, e_);
  const Poly y = digits_of(b, p_, e_);
  Poly prod(2 * e_ - 1, 0);
  for (std::uint32_t i = 0; i < e_; ++i)
    for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  Poly r = poly_mod(std::move(prod), modulus_, p_);
  r.resize(e_, 0);
  return static_cast<Symbol>(value_of(r, p_));
}

Symbol Field::add(Symbol a, Symbol b) const {
  if (!add_table_.empty()) return add_table_[std::uint32_t{a} * q_ + b];
  return digit_add(a, b, false);
}

Symbol Field::sub(Symbol a, Symbol b) const {
  if (!add_table_.empty()) return add_table_[std::uint32_t{a} * q_ + neg_table_[b]];
  return digit_add(a, b, true);
}

Symbol Field::neg(Symbol a) const {
  if (!neg_table_.empty()) return neg_table_[a];
  return digit_add(0, a, true);
}

Symbol Field::mul(Symbol a, Symbol b) const {
  if (!mul_table_.empty()) return mul_table_[std::uint32_t{a} * q_ + b];
  return poly_mul(a, b);
}

Symbol Field::inv(Symbol a) const {
  if (a == 0) throw Error(Errc::kDivisionByZero, "inverse of zero");
  return inv_table_[a];
}

Symbol Field::pow(Symbol a, std::uint64_t exponent) const {
  Symbol result = 1;
  Symbol base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << q_ << ")";
  if (e_ > 1) {
    os << " mod ";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      if (modulus_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (modulus_[i] != 1 || i == 0) os << modulus_[i];
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

FieldPtr make_field(std::uint32_t q) { return std::make_shared<const Field>(q); }

}  // namespace ldlab
