#include "ssg4/field.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>

namespace ssg4 {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NEven: return "NEven";
    case Errc::NOutOfRange: return "NOutOfRange";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::WrongDegree: return "WrongDegree";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::FieldTooLargeForExhaustiveSum: return "FieldTooLargeForExhaustiveSum";
    case Errc::NotGenusFour: return "NotGenusFour";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::MalformedWeilPoly: return "MalformedWeilPoly";
    case Errc::NotReducible: return "NotReducible";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

namespace gf2x {

u64 mod(u128 p, u64 m) {
  const int dm = degree(m);
  for (int dp = degree(p); dp >= dm; dp = degree(p)) {
    p ^= static_cast<u128>(m) << (dp - dm);
  }
  return static_cast<u64>(p);
}

u64 mulmod(u64 a, u64 b, u64 m) { return mod(clmul(a, b), m); }

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    const u64 r = mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

bool is_irreducible(u64 m) {
  const int n = degree(m);
  if (n < 1) return false;
  if (n == 1) return true;
  const u64 x = mod(u64{2}, m);
  auto frob = [&](int k) {
    u64 t = x;
    for (int i = 0; i < k; ++i) t = mulmod(t, t, m);
    return t;
  };
  if (frob(n) != x) return false;
  for (const u64 l : prime_factors(static_cast<u64>(n))) {
    if (gcd(m, frob(n / static_cast<int>(l)) ^ x) != 1) return false;
  }
  return true;
}

namespace {

// Generated by searching x^n + k upwards over odd k.
constexpr std::array<u64, 31> kDefaultModuli = {
    0xb,                 0x25,               0x83,               0x203,
    0x805,               0x201b,             0x8003,             0x20009,
    0x80027,             0x200005,           0x800021,           0x2000009,
    0x8000027,           0x20000005,         0x80000009,         0x20000004b,
    0x800000005,         0x200000003f,       0x8000000011,       0x20000000009,
    0x80000000059,       0x20000000001b,     0x800000000021,     0x2000000000071,
    0x800000000004b,     0x20000000000047,   0x80000000000047,   0x200000000000011,
    0x80000000000007b,   0x2000000000000027, 0x8000000000000003,
};

}  // namespace

u64 default_modulus(int n) {
  if (n % 2 == 0) throw Error(Errc::NEven, "n = " + std::to_string(n));
  if (n < Field::kMinDegree || n > Field::kMaxDegree) {
    throw Error(Errc::NOutOfRange, "n = " + std::to_string(n));
  }
  return kDefaultModuli[static_cast<std::size_t>((n - 3) / 2)];
}

}  // namespace gf2x

namespace {

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1) r = mulmod64(r, b, m);
    b = mulmod64(b, b, m);
    e >>= 1;
  }
  return r;
}

bool is_prime64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit inputs.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto step = [&](u64 v) { return (mulmod64(v, v, n) + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime64(n)) {
    out.push_back(n);
    return;
  }
  for (u64 p = 2; p < 1000; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
      factor_into(n, out);
      return;
    }
  }
  const u64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<u64> prime_factors(u64 value) {
  std::vector<u64> out;
  factor_into(value, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_hex(u64 bits) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(bits));
  return buf;
}

std::string to_hex(FieldElement e) { return to_hex(e.bits); }

u64 parse_hex(const std::string& text) {
  std::string_view s = text;
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
  if (s.empty() || s.size() > 16) throw Error(Errc::BadInput, "bad hex value '" + text + "'");
  u64 v = 0;
  for (char ch : s) {
    int digit;
    if (ch >= '0' && ch <= '9') digit = ch - '0';
    else if (ch >= 'a' && ch <= 'f') digit = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F') digit = ch - 'A' + 10;
    else throw Error(Errc::BadInput, "bad hex value '" + text + "'");
    v = (v << 4) | static_cast<u64>(digit);
  }
  return v;
}

Field Field::make(int n, u64 modulus, std::optional<u64> primitive) {
  if (n % 2 == 0) throw Error(Errc::NEven, "n = " + std::to_string(n));
  if (n < kMinDegree || n > kMaxDegree) throw Error(Errc::NOutOfRange, "n = " + std::to_string(n));
  if (gf2x::degree(modulus) != n) {
    throw Error(Errc::WrongDegree, "modulus " + to_hex(modulus) + " is not of degree " + std::to_string(n));
  }
  if (!gf2x::is_irreducible(modulus)) throw Error(Errc::ReducibleModulus, to_hex(modulus));

  Field f;
  f.n_ = n;
  f.modulus_ = modulus;
  f.element_mask_ = (u64{1} << n) - 1;
  f.tail_ = modulus & f.element_mask_;
  for (int i = 0; i < n; ++i) {
    if (f.trace_by_conjugates(FieldElement{u64{1} << i})) f.trace_mask_ |= u64{1} << i;
  }
  if (primitive) {
    const FieldElement g = f.element(*primitive);
    if (!f.is_primitive(g)) throw Error(Errc::NotPrimitive, to_hex(g) + " does not generate F_q^*");
    f.primitive_ = g;
  }
  return f;
}

Field Field::standard(int n, std::optional<u64> primitive) {
  return make(n, gf2x::default_modulus(n), primitive);
}

FieldElement Field::element(u64 bits) const {
  if ((bits & ~element_mask_) != 0) {
    throw Error(Errc::BadInput, to_hex(bits) + " has coefficients beyond degree " + std::to_string(n_ - 1));
  }
  return {bits};
}

FieldElement Field::pow(FieldElement a, u64 e) const noexcept {
  u64 result = 1;
  u64 base = a.bits;
  while (e != 0) {
    if (e & 1) result = mul_bits(result, base);
    base = mul_bits(base, base);
    e >>= 1;
  }
  return {result};
}

FieldElement Field::frobenius_iter(FieldElement a, u64 k) const noexcept {
  k %= static_cast<u64>(n_);
  u64 v = a.bits;
  for (u64 i = 0; i < k; ++i) v = mul_bits(v, v);
  return {v};
}

int Field::trace_by_conjugates(FieldElement a) const noexcept {
  u64 sum = 0;
  u64 conj = a.bits;
  for (int k = 0; k < n_; ++k) {
    sum ^= conj;
    conj = mul_bits(conj, conj);
  }
  // The sum lies in F_2, so only the constant coefficient can be set.
  return static_cast<int>(sum & 1);
}

FieldElement Field::inv(FieldElement a) const {
  if (a.bits == 0) throw Error(Errc::DivisionByZero, "inverse of 0");
  return pow(a, order() - 2);
}

u64 Field::multiplicative_order(FieldElement a) const {
  if (a.bits == 0) throw Error(Errc::DivisionByZero, "order of 0");
  u64 ord = order() - 1;
  for (const u64 p : prime_factors(order() - 1)) {
    while (ord % p == 0 && pow(a, ord / p) == one()) ord /= p;
  }
  return ord;
}

bool Field::is_primitive(FieldElement a) const {
  return a.bits != 0 && multiplicative_order(a) == order() - 1;
}

u64 Field::trace_dual(FieldElement c) const noexcept {
  u64 dual = 0;
  u64 basis = 1;
  for (int i = 0; i < n_; ++i, basis <<= 1) {
    if (trace_bits(mul_bits(c.bits, basis))) dual |= basis;
  }
  return dual;
}

FieldElement Field::trace_one_representative() const noexcept {
  return {trace_mask_ & (~trace_mask_ + 1)};
}

}  // namespace ssg4
