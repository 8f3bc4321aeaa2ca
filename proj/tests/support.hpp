#pragma once

// Test-only oracles, written independently of the library's code paths.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ssg4/field.hpp"

namespace ssg4::testing {

// Multiply by repeated "multiply by x and reduce" (the textbook xtime loop).
inline u64 xtime_mul(u64 a, u64 b, int n, u64 modulus) {
  u64 result = 0;
  for (int i = n - 1; i >= 0; --i) {
    result <<= 1;
    if (result >> n & 1) result ^= modulus;
    if (b >> i & 1) result ^= a;
  }
  return result;
}

inline u64 xtime_pow(u64 a, u64 e, int n, u64 modulus) {
  u64 r = 1;
  for (u64 i = 0; i < e; ++i) r = xtime_mul(r, a, n, modulus);
  return r;
}

// Evaluates y = f x^9 + a x^5 + b x^3 + c x + d term by term with xtime_mul.
inline u64 rhs_oracle(u64 x, u64 f, u64 a, u64 b, u64 c, u64 d, int n, u64 m) {
  auto p = [&](u64 e) { return xtime_pow(x, e, n, m); };
  return xtime_mul(f, p(9), n, m) ^ xtime_mul(a, p(5), n, m) ^ xtime_mul(b, p(3), n, m) ^
         xtime_mul(c, x, n, m) ^ d;
}

// Absolute trace by summing conjugates with the oracle multiplication.
inline int trace_oracle(u64 a, int n, u64 m) {
  u64 sum = 0, conj = a;
  for (int k = 0; k < n; ++k) {
    sum ^= conj;
    conj = xtime_mul(conj, conj, n, m);
  }
  return static_cast<int>(sum);
}

// Character sum by direct evaluation with the oracles above.
inline std::int64_t char_sum_oracle(const Field& field, u64 f, u64 a, u64 b, u64 c, u64 d) {
  std::int64_t s = 0;
  for (u64 x = 0; x < field.order(); ++x) {
    s += trace_oracle(rhs_oracle(x, f, a, b, c, d, field.n(), field.modulus()), field.n(), field.modulus()) ? -1 : 1;
  }
  return s;
}

// Dimension-free span equality: every vector of one lies in the span of the other.
inline bool same_span(const std::vector<FieldElement>& x, const std::vector<FieldElement>& y) {
  auto rank = [](std::vector<u64> v) {
    int r = 0;
    for (int bit = 63; bit >= 0; --bit) {
      auto it = std::find_if(v.begin() + r, v.end(), [&](u64 e) { return e >> bit & 1; });
      if (it == v.end()) continue;
      std::swap(*it, v[static_cast<std::size_t>(r)]);
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != static_cast<std::size_t>(r) && (v[i] >> bit & 1)) v[i] ^= v[static_cast<std::size_t>(r)];
      }
      ++r;
    }
    return r;
  };
  std::vector<u64> vx, vy, both;
  for (auto e : x) vx.push_back(e.bits);
  for (auto e : y) vy.push_back(e.bits);
  both = vx;
  both.insert(both.end(), vy.begin(), vy.end());
  const int r = rank(both);
  return r == rank(vx) && r == rank(vy);
}

inline u64 random_element(std::mt19937_64& rng, const Field& field) { return rng() & field.element_mask(); }

inline u64 random_nonzero(std::mt19937_64& rng, const Field& field) {
  u64 v;
  do v = random_element(rng, field);
  while (v == 0);
  return v;
}

}  // namespace ssg4::testing
