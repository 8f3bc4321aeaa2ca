#include <doctest.h>

#include <random>

#include "ssg4/kernels.hpp"
#include "support.hpp"

using namespace ssg4;
namespace t = ssg4::testing;

namespace {

CurveParams random_params(std::mt19937_64& rng, const Field& f) {
  return {{t::random_nonzero(rng, f)},
          {t::random_element(rng, f)},
          {t::random_element(rng, f)},
          {t::random_element(rng, f)},
          {t::random_element(rng, f)}};
}

}  // namespace

TEST_CASE("serial char sum matches the oracle") {
  std::mt19937_64 rng(21);
  for (int n : {3, 5, 7, 9}) {
    const Field f = Field::standard(n);
    for (int i = 0; i < 20; ++i) {
      const CurveParams p = random_params(rng, f);
      CHECK(kernels::char_sum_serial(f, p) == t::char_sum_oracle(f, p.f.bits, p.a.bits, p.b.bits, p.c.bits, p.d.bits));
    }
  }
}

TEST_CASE("parallel and table kernels equal the serial reference") {
  std::mt19937_64 rng(22);
  for (int n : {3, 5, 7, 9, 11, 13}) {
    const Field f = Field::standard(n);
    const kernels::PowerTable powers(f);
    for (int i = 0; i < 50; ++i) {
      const CurveParams p = random_params(rng, f);
      const std::int64_t reference = kernels::char_sum_serial(f, p);
      CHECK(kernels::char_sum_parallel(f, p) == reference);
      CHECK(kernels::char_sum_parallel(f, p, 1) == reference);
      CHECK(kernels::char_sum_parallel(f, p, 3) == reference);
      CHECK(kernels::char_sum_table(f, powers, p) == reference);
    }
  }
}

TEST_CASE("Walsh-Hadamard transform gives the sum for every c") {
  std::mt19937_64 rng(23);
  for (int n : {3, 5, 7, 9}) {
    const Field f = Field::standard(n);
    const kernels::PowerTable powers(f);
    const CurveParams base = random_params(rng, f);
    std::vector<std::int64_t> sums;
    kernels::c_free_signs(f, powers, base.f, base.a, base.b, sums);
    std::vector<std::int64_t> serial = sums;
    kernels::walsh_hadamard(sums);
    kernels::walsh_hadamard_serial(serial);
    CHECK(sums == serial);
    for (u64 c = 0; c < f.order(); ++c) {
      const CurveParams p{base.f, base.a, base.b, {c}, Field::zero()};
      REQUIRE(sums[static_cast<std::size_t>(f.trace_dual({c}))] == kernels::char_sum_serial(f, p));
    }
  }
}

TEST_CASE("large transform takes the parallel path and still matches") {
  std::mt19937_64 rng(24);
  std::vector<std::int64_t> values(std::size_t{1} << 16);
  for (auto& v : values) v = (rng() & 1) ? 1 : -1;
  std::vector<std::int64_t> serial = values;
  kernels::walsh_hadamard(values);
  kernels::walsh_hadamard_serial(serial);
  CHECK(values == serial);
}

TEST_CASE("power table bound") {
  CHECK_THROWS_AS(kernels::PowerTable(Field::standard(21)), Error);
}
