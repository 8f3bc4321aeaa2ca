#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ssg4/field.hpp"

namespace ssg4 {

// Q(x) = Tr(f x^9 + a x^5 + b x^3 + c x) over a fixed field.
struct QuadraticFormSpec {
  FieldElement f, a, b, c;
};

struct FormProfile {
  int w = 0;                           // dim W
  std::vector<FieldElement> W_basis;   // reduced echelon form
  bool q_vanishes_on_W = false;
  int dim_W0 = 0;
  int rank_B = 0;                      // n - w
  int rank_Q = 0;                      // n - dim_W0
  std::uint64_t predicted_abs_S = 0;   // 0 or 2^((n+w)/2)
  std::optional<std::uint64_t> M;      // #{x : Q(x) = 0}, small fields only
};

// Bound on n for the brute-force radical.
inline constexpr int kRadicalOracleMaxN = 17;
// classify_form fills M by enumeration up to this n.
inline constexpr int kDefaultExhaustiveMBound = 20;

int eval_Q(const Field& field, const QuadraticFormSpec& spec, FieldElement x);
int polarize(const Field& field, const QuadraticFormSpec& spec, FieldElement x, FieldElement y);
// L(u) = f u + f^8 u^64 + a^2 u^2 + a^8 u^32 + b^4 u^4 + b^8 u^16.
FieldElement linearized_L(const Field& field, const QuadraticFormSpec& spec, FieldElement u);

// F_2-basis of ker L by elimination on the matrix of u -> L(u).
std::vector<FieldElement> kernel_W(const Field& field, const QuadraticFormSpec& spec);
// {x : B(x, x^j) = 0 for every basis vector x^j}, found by enumerating the field.
// Throws FieldTooLarge for n > kRadicalOracleMaxN.
std::vector<FieldElement> radical_oracle(const Field& field, const QuadraticFormSpec& spec);

FormProfile classify_form(const Field& field, const QuadraticFormSpec& spec,
                          int exhaustive_M_bound = kDefaultExhaustiveMBound);

// The forms Q_c = Tr(f x^9 + a x^5 + b x^3 + c x) for fixed (f, a, b) share
// the radical W. Scans classify every c against one precomputed W and the
// c-free part of Q on each of its 2^w elements.
class FormFamily {
 public:
  FormFamily(const Field& field, FieldElement f, FieldElement a, FieldElement b);

  const std::vector<FieldElement>& W_basis() const noexcept { return W_basis_; }
  int w() const noexcept { return static_cast<int>(W_basis_.size()); }
  // Profile of Q_c; M is left unset.
  FormProfile profile(FieldElement c) const;

 private:
  const Field* field_;
  QuadraticFormSpec base_;
  std::vector<FieldElement> W_basis_;
  // Elements of W with their Tr(f u^9 + a u^5 + b u^3), when w is small enough to list.
  std::vector<u64> span_;
  std::vector<std::uint8_t> span_q0_;
};

namespace f2 {

// Reduced echelon form over F_2: leading bits strictly decreasing, each
// leading bit cleared in every other vector. Zero vectors are dropped.
std::vector<u64> reduced_echelon(std::vector<u64> vectors);

// Nullspace of the linear map sending basis vector e_i to images[i].
std::vector<u64> nullspace(const std::vector<u64>& images);

// All 2^k elements of span(basis), Gray-code order starting at 0.
std::vector<u64> span(const std::vector<u64>& basis);

}  // namespace f2

}  // namespace ssg4
