#include "ssg4/curve.hpp"

#include <cstdlib>

#include "ssg4/kernels.hpp"

namespace ssg4 {

namespace {

void check_cap(const Field& field, int cap) {
  if (field.n() > cap) {
    throw Error(Errc::FieldTooLargeForExhaustiveSum,
                "n = " + std::to_string(field.n()) + " exceeds the exhaustive cap " + std::to_string(cap));
  }
}

}  // namespace

void validate_params(const Field& field, const CurveParams& params) {
  for (const FieldElement e : {params.f, params.a, params.b, params.c, params.d}) {
    if ((e.bits & ~field.element_mask()) != 0) {
      throw Error(Errc::InvalidParams, to_hex(e) + " is not an element of F_2^" + std::to_string(field.n()));
    }
  }
  if (params.f.bits == 0) throw Error(Errc::InvalidParams, "f = 0 does not define a genus-4 curve");
}

std::int64_t char_sum_S(const Field& field, const CurveParams& params, int exhaustive_cap) {
  validate_params(field, params);
  check_cap(field, exhaustive_cap);
  return kernels::char_sum_parallel(field, params);
}

std::uint64_t count_points_direct(const Field& field, const CurveParams& params, int cap) {
  validate_params(field, params);
  check_cap(field, cap);
  // preimages[v] = #{y : y^2 + y = v}, by listing every y.
  std::vector<std::uint8_t> preimages(static_cast<std::size_t>(field.order()), 0);
  for (u64 y = 0; y < field.order(); ++y) ++preimages[static_cast<std::size_t>(field.mul_bits(y, y) ^ y)];

  std::uint64_t affine = 0;
  for (u64 x = 0; x < field.order(); ++x) {
    const FieldElement e{x};
    FieldElement rhs = field.mul(params.f, field.pow(e, 9));
    rhs = Field::add(rhs, field.mul(params.a, field.pow(e, 5)));
    rhs = Field::add(rhs, field.mul(params.b, field.pow(e, 3)));
    rhs = Field::add(rhs, field.mul(params.c, e));
    rhs = Field::add(rhs, params.d);
    affine += preimages[static_cast<std::size_t>(rhs.bits)];
  }
  return affine + 1;
}

std::uint64_t count_points_fast(const Field& field, const CurveParams& params, int exhaustive_cap) {
  const std::int64_t S = char_sum_S(field, params, exhaustive_cap);
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(field.order()) + 1 + S);
}

bool is_supersingular_form(const RankZeroForm& form) {
  if (form.c9.bits == 0) throw Error(Errc::NotGenusFour, "c9 = 0");
  return form.c7.bits == 0;
}

std::vector<std::int64_t> allowed_S_values(int n) {
  const std::int64_t base = std::int64_t{1} << ((n + 1) / 2);
  return {-4 * base, -2 * base, -base, 0, base, 2 * base, 4 * base};
}

bool in_allowed_set(int n, std::int64_t S) {
  for (const std::int64_t v : allowed_S_values(n)) {
    if (v == S) return true;
  }
  return false;
}

bool is_three_multiple(int n, std::int64_t S) {
  const std::int64_t base = std::int64_t{1} << ((n + 1) / 2);
  return S == 3 * base || S == -3 * base;
}

bool consistent_with_profile(int n, std::int64_t S, const FormProfile& profile) {
  if (profile.w % 2 == 0 || profile.rank_B % 2 != 0) return false;
  if (n >= 7 && profile.w > 5) return false;
  if (profile.q_vanishes_on_W == (S == 0)) return false;
  return static_cast<std::uint64_t>(std::llabs(S)) == profile.predicted_abs_S;
}

SpectrumRecord make_record(const Field& field, const CurveParams& params, std::int64_t S, const FormProfile& profile) {
  SpectrumRecord r;
  r.params = params;
  r.S = S;
  r.N = static_cast<std::uint64_t>(static_cast<std::int64_t>(field.order()) + 1 + S);
  r.w = profile.w;
  r.q_vanishes_on_W = profile.q_vanishes_on_W;
  r.consistent = consistent_with_profile(field.n(), S, profile);
  return r;
}

SpectrumRecord classify_curve(const Field& field, const CurveParams& params, int exhaustive_cap) {
  const std::int64_t S = char_sum_S(field, params, exhaustive_cap);
  const FormProfile profile = classify_form(field, {params.f, params.a, params.b, params.c}, -1);
  return make_record(field, params, S, profile);
}

}  // namespace ssg4
