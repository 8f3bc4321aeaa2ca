#pragma once

#include <cstdint>
#include <vector>

#include "ssg4/field.hpp"
#include "ssg4/quadform.hpp"

namespace ssg4 {

// y^2 + y = f x^9 + a x^5 + b x^3 + c x + d.
struct CurveParams {
  FieldElement f, a, b, c, d;

  friend bool operator==(const CurveParams&, const CurveParams&) = default;
};

// y^2 + y = c9 x^9 + c7 x^7 + c5 x^5 + c3 x^3 + c1 x, the 2-rank zero model.
struct RankZeroForm {
  FieldElement c9, c7, c5, c3, c1;
};

struct SpectrumRecord {
  CurveParams params;
  std::int64_t S = 0;
  std::uint64_t N = 0;
  int w = 0;
  bool q_vanishes_on_W = false;
  bool consistent = false;
};

inline constexpr int kDefaultExhaustiveCap = 29;
// count_points_direct keeps a 2^n byte table of y^2 + y preimage counts.
inline constexpr int kDirectCountCap = 24;

// Throws InvalidParams when f = 0 or a coefficient lies outside the field.
void validate_params(const Field& field, const CurveParams& params);

// Sum over x of (-1)^Tr(f x^9 + a x^5 + b x^3 + c x + d). Parallel when
// OpenMP is enabled; identical to kernels::char_sum_serial.
std::int64_t char_sum_S(const Field& field, const CurveParams& params, int exhaustive_cap = kDefaultExhaustiveCap);

// Affine solutions of the curve equation found by tabulating y^2 + y over all
// y, plus the single point at infinity.
std::uint64_t count_points_direct(const Field& field, const CurveParams& params, int cap = kDirectCountCap);

// q + 1 + S.
std::uint64_t count_points_fast(const Field& field, const CurveParams& params, int exhaustive_cap = kDefaultExhaustiveCap);

bool is_supersingular_form(const RankZeroForm& form);

// Allowed values of S: 0, +-2^((n+1)/2), +-2^((n+3)/2), +-2^((n+5)/2).
std::vector<std::int64_t> allowed_S_values(int n);
bool in_allowed_set(int n, std::int64_t S);
// S = +-3 * 2^((n+1)/2).
bool is_three_multiple(int n, std::int64_t S);

// Whether the record agrees with its form profile: |S| equals the predicted
// magnitude, w is odd, and w <= 5 once n >= 7.
bool consistent_with_profile(int n, std::int64_t S, const FormProfile& profile);

SpectrumRecord make_record(const Field& field, const CurveParams& params, std::int64_t S, const FormProfile& profile);

SpectrumRecord classify_curve(const Field& field, const CurveParams& params, int exhaustive_cap = kDefaultExhaustiveCap);

}  // namespace ssg4
