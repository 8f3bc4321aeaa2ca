#include "ssg4/quadform.hpp"

#include <algorithm>
#include <array>

namespace ssg4 {

namespace f2 {

std::vector<u64> reduced_echelon(std::vector<u64> vectors) {
  std::vector<u64> rows;
  for (u64 v : vectors) {
    for (u64 r : rows) {
      if (v & (u64{1} << gf2x::degree(r))) v ^= r;
    }
    if (v == 0) continue;
    const u64 lead = u64{1} << gf2x::degree(v);
    for (u64& r : rows) {
      if (r & lead) r ^= v;
    }
    rows.push_back(v);
  }
  std::sort(rows.begin(), rows.end(), [](u64 x, u64 y) { return x > y; });
  return rows;
}

std::vector<u64> nullspace(const std::vector<u64>& images) {
  struct Pivot {
    u64 image = 0;
    u64 combo = 0;
  };
  std::array<Pivot, 64> pivots{};
  std::vector<u64> kernel;
  for (std::size_t i = 0; i < images.size(); ++i) {
    u64 image = images[i];
    u64 combo = u64{1} << i;
    while (image != 0) {
      const int lead = gf2x::degree(image);
      if (pivots[lead].image == 0) break;
      image ^= pivots[lead].image;
      combo ^= pivots[lead].combo;
    }
    if (image == 0) {
      kernel.push_back(combo);
    } else {
      pivots[gf2x::degree(image)] = {image, combo};
    }
  }
  return reduced_echelon(std::move(kernel));
}

std::vector<u64> span(const std::vector<u64>& basis) {
  std::vector<u64> out;
  out.reserve(std::size_t{1} << basis.size());
  u64 v = 0;
  out.push_back(v);
  for (u64 i = 1; i < (u64{1} << basis.size()); ++i) {
    v ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    out.push_back(v);
  }
  return out;
}

}  // namespace f2

namespace {

std::vector<FieldElement> to_elements(const std::vector<u64>& bits) {
  std::vector<FieldElement> out;
  out.reserve(bits.size());
  for (u64 b : bits) out.push_back({b});
  return out;
}

}  // namespace

int eval_Q(const Field& field, const QuadraticFormSpec& spec, FieldElement x) {
  const u64 x2 = field.mul_bits(x.bits, x.bits);
  const u64 x3 = field.mul_bits(x2, x.bits);
  const u64 x5 = field.mul_bits(x3, x2);
  const u64 x9 = field.mul_bits(field.mul_bits(x3, x3), x3);
  const u64 value = field.mul_bits(spec.f.bits, x9) ^ field.mul_bits(spec.a.bits, x5) ^
                    field.mul_bits(spec.b.bits, x3) ^ field.mul_bits(spec.c.bits, x.bits);
  return field.trace_bits(value);
}

int polarize(const Field& field, const QuadraticFormSpec& spec, FieldElement x, FieldElement y) {
  return eval_Q(field, spec, Field::add(x, y)) ^ eval_Q(field, spec, x) ^ eval_Q(field, spec, y);
}

namespace {

// Coefficients of L with their Frobenius powers taken once.
struct LinearizedCoeffs {
  u64 f1, f8, a2, a8, b4, b8;

  LinearizedCoeffs(const Field& field, const QuadraticFormSpec& spec)
      : f1(spec.f.bits),
        f8(field.frobenius_iter(spec.f, 3).bits),
        a2(field.frobenius_iter(spec.a, 1).bits),
        a8(field.frobenius_iter(spec.a, 3).bits),
        b4(field.frobenius_iter(spec.b, 2).bits),
        b8(field.frobenius_iter(spec.b, 3).bits) {}

  u64 apply(const Field& field, u64 u) const noexcept {
    const u64 u2 = field.mul_bits(u, u);
    const u64 u4 = field.mul_bits(u2, u2);
    const u64 u8 = field.mul_bits(u4, u4);
    const u64 u16 = field.mul_bits(u8, u8);
    const u64 u32 = field.mul_bits(u16, u16);
    const u64 u64_ = field.mul_bits(u32, u32);
    return field.mul_bits(f1, u) ^ field.mul_bits(f8, u64_) ^ field.mul_bits(a2, u2) ^
           field.mul_bits(a8, u32) ^ field.mul_bits(b4, u4) ^ field.mul_bits(b8, u16);
  }
};

}  // namespace

FieldElement linearized_L(const Field& field, const QuadraticFormSpec& spec, FieldElement u) {
  return {LinearizedCoeffs(field, spec).apply(field, u.bits)};
}

std::vector<FieldElement> kernel_W(const Field& field, const QuadraticFormSpec& spec) {
  const LinearizedCoeffs coeffs(field, spec);
  std::vector<u64> images(static_cast<std::size_t>(field.n()));
  for (int i = 0; i < field.n(); ++i) {
    images[static_cast<std::size_t>(i)] = coeffs.apply(field, u64{1} << i);
  }
  return to_elements(f2::nullspace(images));
}

std::vector<FieldElement> radical_oracle(const Field& field, const QuadraticFormSpec& spec) {
  if (field.n() > kRadicalOracleMaxN) {
    throw Error(Errc::FieldTooLarge, "radical oracle needs n <= " + std::to_string(kRadicalOracleMaxN));
  }
  std::vector<int> q_basis(static_cast<std::size_t>(field.n()));
  for (int j = 0; j < field.n(); ++j) q_basis[static_cast<std::size_t>(j)] = eval_Q(field, spec, {u64{1} << j});

  std::vector<u64> members;
  for (u64 x = 0; x < field.order(); ++x) {
    const int qx = eval_Q(field, spec, {x});
    bool in_radical = true;
    for (int j = 0; j < field.n() && in_radical; ++j) {
      const u64 ej = u64{1} << j;
      in_radical = (eval_Q(field, spec, {x ^ ej}) ^ qx ^ q_basis[static_cast<std::size_t>(j)]) == 0;
    }
    if (in_radical) members.push_back(x);
  }
  return to_elements(f2::reduced_echelon(std::move(members)));
}

namespace {

// Beyond 2^24 elements (only the degenerate f = a = b = 0 family at large n)
// Q on W is decided from the basis: Q(u + v) = Q(u) + Q(v) + B(u, v) and B
// vanishes on W.
constexpr int kEnumerateLimit = 24;

}  // namespace

FormFamily::FormFamily(const Field& field, FieldElement f, FieldElement a, FieldElement b)
    : field_(&field), base_{f, a, b, Field::zero()}, W_basis_(kernel_W(field, base_)) {
  if (w() <= kEnumerateLimit) {
    std::vector<u64> basis;
    for (const auto& u : W_basis_) basis.push_back(u.bits);
    span_ = f2::span(basis);
    span_q0_.reserve(span_.size());
    for (u64 u : span_) span_q0_.push_back(static_cast<std::uint8_t>(eval_Q(field, base_, {u})));
  }
}

FormProfile FormFamily::profile(FieldElement c) const {
  const Field& field = *field_;
  FormProfile p;
  const int n = field.n();
  p.w = w();
  p.W_basis = W_basis_;

  p.q_vanishes_on_W = true;
  if (!span_.empty()) {
    const u64 dual_c = field.trace_dual(c);
    for (std::size_t i = 0; i < span_.size(); ++i) {
      if ((span_q0_[i] ^ (std::popcount(dual_c & span_[i]) & 1)) != 0) {
        p.q_vanishes_on_W = false;
        break;
      }
    }
  } else {
    const QuadraticFormSpec spec{base_.f, base_.a, base_.b, c};
    for (const auto& u : W_basis_) {
      if (eval_Q(field, spec, u) != 0) {
        p.q_vanishes_on_W = false;
        break;
      }
    }
  }

  p.dim_W0 = p.q_vanishes_on_W ? p.w : p.w - 1;
  p.rank_B = n - p.w;
  p.rank_Q = n - p.dim_W0;
  // n + w is even whenever rank_B is; callers check the parity separately.
  p.predicted_abs_S = p.q_vanishes_on_W ? (u64{1} << ((n + p.w) / 2)) : 0;
  return p;
}

FormProfile classify_form(const Field& field, const QuadraticFormSpec& spec, int exhaustive_M_bound) {
  FormProfile p = FormFamily(field, spec.f, spec.a, spec.b).profile(spec.c);
  if (field.n() <= exhaustive_M_bound) {
    u64 zeros = 0;
    for (u64 x = 0; x < field.order(); ++x) zeros += eval_Q(field, spec, {x}) == 0;
    p.M = zeros;
  }
  return p;
}

}  // namespace ssg4
