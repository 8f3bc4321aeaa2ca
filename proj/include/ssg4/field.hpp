#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssg4/error.hpp"

namespace ssg4 {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Polynomial arithmetic over F_2 on machine words: bit i is the coefficient
// of x^i. Used for field construction and as the multiplication primitive.
namespace gf2x {

inline u128 clmul(u64 a, u64 b) noexcept {
  u128 r = 0;
  const u128 wide = a;
  while (b != 0) {
    r ^= wide << std::countr_zero(b);
    b &= b - 1;
  }
  return r;
}

inline int degree(u64 p) noexcept { return p == 0 ? -1 : 63 - std::countl_zero(p); }
inline int degree(u128 p) noexcept {
  const u64 hi = static_cast<u64>(p >> 64);
  return hi != 0 ? 127 - std::countl_zero(hi) : degree(static_cast<u64>(p));
}

// Remainder of p modulo m (m != 0), any degrees.
u64 mod(u128 p, u64 m);
u64 mulmod(u64 a, u64 b, u64 m);
u64 gcd(u64 a, u64 b);

// Rabin's test: x^(2^n) = x mod m and gcd(x^(2^(n/l)) - x, m) = 1 for each prime l | n.
bool is_irreducible(u64 m);

// Lexicographically least irreducible of degree n (odd n in [3, 63]) except
// that it coincides with x^11 + x^2 + 1 at n = 11.
u64 default_modulus(int n);

}  // namespace gf2x

// Distinct prime factors of a 64-bit integer (Pollard rho + Miller-Rabin).
std::vector<u64> prime_factors(u64 value);

struct FieldElement {
  u64 bits = 0;

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

std::string to_hex(u64 bits);
std::string to_hex(FieldElement e);
// Accepts "0x..." or bare hex digits.
u64 parse_hex(const std::string& text);

// F_{2^n} in a polynomial basis, n odd in [3, 63]. Immutable once built.
class Field {
 public:
  static constexpr int kMinDegree = 3;
  static constexpr int kMaxDegree = 63;

  // Validates degree, irreducibility and (when given) primitivity.
  static Field make(int n, u64 modulus, std::optional<u64> primitive = std::nullopt);
  // Built-in modulus for n.
  static Field standard(int n, std::optional<u64> primitive = std::nullopt);

  int n() const noexcept { return n_; }
  u64 modulus() const noexcept { return modulus_; }
  u64 element_mask() const noexcept { return element_mask_; }
  u64 order() const noexcept { return u64{1} << n_; }
  u64 trace_mask() const noexcept { return trace_mask_; }
  const std::optional<FieldElement>& primitive() const noexcept { return primitive_; }

  // Throws BadInput when bits has coefficients at or above x^n.
  FieldElement element(u64 bits) const;
  static constexpr FieldElement zero() noexcept { return {0}; }
  static constexpr FieldElement one() noexcept { return {1}; }
  // The residue class of x.
  static constexpr FieldElement x() noexcept { return {2}; }

  static constexpr FieldElement add(FieldElement a, FieldElement b) noexcept { return {a.bits ^ b.bits}; }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept { return {mul_bits(a.bits, b.bits)}; }
  FieldElement sqr(FieldElement a) const noexcept { return {mul_bits(a.bits, a.bits)}; }
  FieldElement pow(FieldElement a, u64 e) const noexcept;
  // a^(2^k); k is reduced mod n.
  FieldElement frobenius_iter(FieldElement a, u64 k) const noexcept;
  int trace(FieldElement a) const noexcept { return trace_bits(a.bits); }
  // Sum of conjugates a + a^2 + ... + a^(2^(n-1)); reference for trace().
  int trace_by_conjugates(FieldElement a) const noexcept;
  FieldElement inv(FieldElement a) const;

  // Order of a in the multiplicative group (a != 0).
  u64 multiplicative_order(FieldElement a) const;
  bool is_primitive(FieldElement a) const;

  // Word-level entry points for the scan kernels.
  u64 reduce(u128 p) const noexcept {
    while ((p >> n_) != 0) {
      const u64 hi = static_cast<u64>(p >> n_);
      p = (p & element_mask_) ^ gf2x::clmul(hi, tail_);
    }
    return static_cast<u64>(p);
  }
  u64 mul_bits(u64 a, u64 b) const noexcept { return reduce(gf2x::clmul(a, b)); }
  int trace_bits(u64 a) const noexcept { return std::popcount(a & trace_mask_) & 1; }

  // Bits i with Tr(c * x^i) = 1, so that Tr(c*y) = parity(dual & y).
  u64 trace_dual(FieldElement c) const noexcept;

  // First basis element x^i with odd trace.
  FieldElement trace_one_representative() const noexcept;

 private:
  Field() = default;

  int n_ = 0;
  u64 modulus_ = 0;
  u64 tail_ = 0;  // modulus without the leading x^n
  u64 element_mask_ = 0;
  u64 trace_mask_ = 0;
  std::optional<FieldElement> primitive_;
};

}  // namespace ssg4
