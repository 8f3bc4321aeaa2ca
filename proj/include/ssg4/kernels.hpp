#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ssg4/curve.hpp"
#include "ssg4/field.hpp"

// Hot loops of the point counts. Every parallel kernel has a serial
// counterpart computed the plain way (multiply, then take the trace); the
// tests hold the two to exact equality.
namespace ssg4::kernels {

// Reference: evaluates the right-hand side with field multiplications and
// reduces each value with the trace.
std::int64_t char_sum_serial(const Field& field, const CurveParams& params);

// OpenMP over x. Uses trace duals so each term costs one AND:
// Tr(f y) = parity(dual(f) & y). workers <= 0 means the OpenMP default.
std::int64_t char_sum_parallel(const Field& field, const CurveParams& params, int workers = 0);

// x^3, x^5, x^9 for every x of a small field, indexed by x.
class PowerTable {
 public:
  static constexpr int kMaxN = 20;

  explicit PowerTable(const Field& field);

  std::span<const u64> cube() const noexcept { return cube_; }
  std::span<const u64> fifth() const noexcept { return fifth_; }
  std::span<const u64> ninth() const noexcept { return ninth_; }

 private:
  std::vector<u64> cube_, fifth_, ninth_;
};

// Sum with table powers and trace duals; single-threaded, callers parallelize
// over curves.
std::int64_t char_sum_table(const Field& field, const PowerTable& powers, const CurveParams& params);

// (-1)^Tr(f x^9 + a x^5 + b x^3) for every x, then its Walsh-Hadamard
// transform, gives the sums for every c at once: the entry at index
// dual(c) is the sum for c (with d = 0).
void c_free_signs(const Field& field, const PowerTable& powers, FieldElement f, FieldElement a, FieldElement b,
                  std::vector<std::int64_t>& out);
void walsh_hadamard(std::span<std::int64_t> values);

// In-place transform of +-1 values; serial reference for walsh_hadamard.
void walsh_hadamard_serial(std::span<std::int64_t> values);

}  // namespace ssg4::kernels
