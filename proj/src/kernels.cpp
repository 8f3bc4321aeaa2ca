#include "ssg4/kernels.hpp"

#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ssg4::kernels {

namespace {

struct Duals {
  u64 f, a, b, c;
  int d;  // Tr(d)

  Duals(const Field& field, const CurveParams& p)
      : f(field.trace_dual(p.f)),
        a(field.trace_dual(p.a)),
        b(field.trace_dual(p.b)),
        c(field.trace_dual(p.c)),
        d(field.trace(p.d)) {}
};

int set_workers(int workers) {
#ifdef _OPENMP
  return workers > 0 ? workers : omp_get_max_threads();
#else
  (void)workers;
  return 1;
#endif
}

}  // namespace

std::int64_t char_sum_serial(const Field& field, const CurveParams& p) {
  std::int64_t sum = 0;
  for (u64 x = 0; x < field.order(); ++x) {
    const FieldElement e{x};
    FieldElement value = field.mul(p.f, field.pow(e, 9));
    value = Field::add(value, field.mul(p.a, field.pow(e, 5)));
    value = Field::add(value, field.mul(p.b, field.pow(e, 3)));
    value = Field::add(value, field.mul(p.c, e));
    value = Field::add(value, p.d);
    sum += field.trace(value) ? -1 : 1;
  }
  return sum;
}

std::int64_t char_sum_parallel(const Field& field, const CurveParams& p, int workers) {
  const Duals duals(field, p);
  const auto q = static_cast<std::int64_t>(field.order());
  std::int64_t odd = 0;
  [[maybe_unused]] const int threads = set_workers(workers);
#pragma omp parallel for schedule(static) reduction(+ : odd) num_threads(threads)
  for (std::int64_t i = 0; i < q; ++i) {
    const auto x = static_cast<u64>(i);
    const u64 x2 = field.mul_bits(x, x);
    const u64 x3 = field.mul_bits(x2, x);
    const u64 x5 = field.mul_bits(x3, x2);
    const u64 x9 = field.mul_bits(field.mul_bits(x3, x3), x3);
    const u64 bits = (duals.f & x9) ^ (duals.a & x5) ^ (duals.b & x3) ^ (duals.c & x);
    odd += (std::popcount(bits) & 1) ^ duals.d;
  }
  return q - 2 * odd;
}

PowerTable::PowerTable(const Field& field) {
  if (field.n() > kMaxN) {
    throw Error(Errc::FieldTooLarge, "power table needs n <= " + std::to_string(kMaxN));
  }
  const auto q = static_cast<std::size_t>(field.order());
  cube_.resize(q);
  fifth_.resize(q);
  ninth_.resize(q);
  for (u64 x = 0; x < q; ++x) {
    const u64 x2 = field.mul_bits(x, x);
    const u64 x3 = field.mul_bits(x2, x);
    cube_[x] = x3;
    fifth_[x] = field.mul_bits(x3, x2);
    ninth_[x] = field.mul_bits(field.mul_bits(x3, x3), x3);
  }
}

std::int64_t char_sum_table(const Field& field, const PowerTable& powers, const CurveParams& p) {
  const Duals duals(field, p);
  const auto cube = powers.cube();
  const auto fifth = powers.fifth();
  const auto ninth = powers.ninth();
  std::int64_t odd = 0;
  for (std::size_t x = 0; x < cube.size(); ++x) {
    const u64 bits = (duals.f & ninth[x]) ^ (duals.a & fifth[x]) ^ (duals.b & cube[x]) ^ (duals.c & x);
    odd += std::popcount(bits) & 1;
  }
  const auto q = static_cast<std::int64_t>(cube.size());
  const std::int64_t sum = q - 2 * odd;
  return duals.d ? -sum : sum;
}

void c_free_signs(const Field& field, const PowerTable& powers, FieldElement f, FieldElement a, FieldElement b,
                  std::vector<std::int64_t>& out) {
  const u64 df = field.trace_dual(f);
  const u64 da = field.trace_dual(a);
  const u64 db = field.trace_dual(b);
  const auto cube = powers.cube();
  const auto fifth = powers.fifth();
  const auto ninth = powers.ninth();
  out.resize(cube.size());
  for (std::size_t x = 0; x < cube.size(); ++x) {
    const u64 bits = (df & ninth[x]) ^ (da & fifth[x]) ^ (db & cube[x]);
    out[x] = (std::popcount(bits) & 1) ? -1 : 1;
  }
}

void walsh_hadamard_serial(std::span<std::int64_t> values) {
  const std::size_t size = values.size();
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t j = block; j < block + half; ++j) {
        const std::int64_t u = values[j];
        const std::int64_t v = values[j + half];
        values[j] = u + v;
        values[j + half] = u - v;
      }
    }
  }
}

void walsh_hadamard(std::span<std::int64_t> values) {
  const auto size = static_cast<std::int64_t>(values.size());
  // Below this size the fork/join costs more than the transform.
  constexpr std::int64_t kParallelMin = std::int64_t{1} << 14;
  std::int64_t* data = values.data();
  for (int shift = 0; (std::int64_t{1} << shift) < size; ++shift) {
    const std::int64_t half = std::int64_t{1} << shift;
#pragma omp parallel for schedule(static) if (size >= kParallelMin)
    for (std::int64_t i = 0; i < size / 2; ++i) {
      const std::int64_t j = ((i >> shift) << (shift + 1)) | (i & (half - 1));
      const std::int64_t u = data[j];
      const std::int64_t v = data[j + half];
      data[j] = u + v;
      data[j + half] = u - v;
    }
  }
}

}  // namespace ssg4::kernels
