#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ssg4/curve.hpp"
#include "ssg4/field.hpp"
#include "ssg4/io.hpp"
#include "ssg4/weil.hpp"

namespace ssg4::survey {

enum class ScanMode { Exhaustive, Sample };
enum class DPolicy { TwoRepresentatives, Full };
enum class OutputFormat { JsonLines, Csv };

// Exhaustive scans beyond this n need allow_large.
inline constexpr int kExhaustiveDefaultMaxN = 7;
inline constexpr std::size_t kStoredViolationLimit = 1000;

struct ScanConfig {
  int n = 3;
  std::optional<u64> modulus;  // built-in table when unset
  ScanMode mode = ScanMode::Exhaustive;
  std::uint64_t sample_size = 100000;
  std::uint64_t seed = 1;
  DPolicy d_policy = DPolicy::TwoRepresentatives;
  int workers = 0;  // 0 = OpenMP default
  std::string output_path;  // empty = no per-curve output
  OutputFormat format = OutputFormat::Csv;
  bool allow_large = false;
};

struct ScanSummary {
  int n = 0;
  std::uint64_t seed = 0;
  std::uint64_t curves_scanned = 0;
  std::map<std::int64_t, std::uint64_t> spectrum;
  std::map<int, std::uint64_t> w_histogram;
  std::vector<SpectrumRecord> violations;  // first kStoredViolationLimit
  std::uint64_t violation_count = 0;
  std::uint64_t consistency_failures = 0;
  std::uint64_t three_multiple_hits = 0;

  bool ok() const noexcept { return violation_count == 0; }
  void add(int field_n, const SpectrumRecord& record);
  void merge(const ScanSummary& other);

  friend bool operator==(const ScanSummary& x, const ScanSummary& y) {
    return x.n == y.n && x.seed == y.seed && x.curves_scanned == y.curves_scanned && x.spectrum == y.spectrum &&
           x.w_histogram == y.w_histogram && x.violation_count == y.violation_count &&
           x.consistency_failures == y.consistency_failures && x.three_multiple_hits == y.three_multiple_hits;
  }
};

// xorshift64* (Vigna). A zero seed is replaced by a fixed odd constant.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed) noexcept : state_(seed != 0 ? seed : 0x9E3779B97F4A7C15ull) {}

  std::uint64_t next() noexcept {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1Dull;
  }

 private:
  std::uint64_t state_;
};

// Sample draws: f (redrawn until nonzero), a, b, c, then d under the full
// policy, each the low n bits of one generator output.
CurveParams draw_params(const Field& field, Xorshift64Star& rng, DPolicy policy);

// Values of d paired with each (f, a, b, c): {0, delta} with delta the first
// basis element of trace one, or the whole field.
std::vector<FieldElement> d_values(const Field& field, DPolicy policy);

using RecordSink = std::function<void(const SpectrumRecord&)>;

Field scan_field(const ScanConfig& cfg);
// Throws BadInput for exhaustive scans past kExhaustiveDefaultMaxN without
// allow_large, or a zero sample size.
void validate(const ScanConfig& cfg);

// Reference scan: every sum by kernels::char_sum_serial, every profile by
// classify_form. Records reach the sink in enumeration order.
ScanSummary scan_serial(const Field& field, const ScanConfig& cfg, const RecordSink& sink = {});
// OpenMP scan; exhaustive mode gets all c at once from a Walsh-Hadamard
// transform per (f, a, b). Same summary and record order as scan_serial.
ScanSummary scan_parallel(const Field& field, const ScanConfig& cfg, const RecordSink& sink = {});

// Validates, builds the field, runs scan_parallel and writes records to
// cfg.output_path when set.
ScanSummary cmd_scan(const ScanConfig& cfg);
io::json to_json(const ScanSummary& summary);

// The four n = 11 curves with coefficients given as powers of the generator
// w = x of F_2[x]/(x^11 + x^2 + 1); an unset exponent means the zero element.
struct GoldenCurve {
  std::string name;
  std::optional<u64> f, a, b, c;
  std::int64_t expected_S;
};

std::vector<GoldenCurve> golden_curves();
CurveParams golden_params(const Field& field, const GoldenCurve& curve);

inline constexpr u64 kGoldenModulus = 0x805;

struct ExampleResult {
  GoldenCurve curve;
  SpectrumRecord record;
  bool ok = false;
};

// Evaluates the golden curves in F_2[x]/(modulus) with w = x. The modulus
// must be irreducible of degree 11; x need not be primitive.
std::vector<ExampleResult> run_examples(u64 modulus = kGoldenModulus);

struct ZetaRow {
  std::string label;
  mpz_class a1;
  mpz_class a1_over_sqrt2q;  // a1 / 2^((n+1)/2), exact when divisible
  bool divisible = true;
  bool survives_serre = false;
};

struct ZetaReport {
  int n = 0;
  int degree = 0;
  mpz_class serre_bound;
  std::vector<ZetaRow> rows;
  std::set<long> achievable_m;  // among rows surviving the bound
  std::vector<long> curve_allowed_m = {-4, -2, -1, 0, 1, 2, 4};
};

ZetaReport cmd_zeta(int n, int degree = 8);
// CSV table followed by a '#'-prefixed cross-check line.
std::string to_csv(const ZetaReport& report);

}  // namespace ssg4::survey
