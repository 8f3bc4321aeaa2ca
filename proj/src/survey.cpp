#include "ssg4/survey.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ssg4/kernels.hpp"
#include "ssg4/quadform.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ssg4::survey {

namespace {

int thread_count(int workers) {
#ifdef _OPENMP
  return workers > 0 ? workers : omp_get_max_threads();
#else
  (void)workers;
  return 1;
#endif
}

// Samples processed between flushes of the record buffer.
constexpr std::uint64_t kSampleBlock = std::uint64_t{1} << 14;

}  // namespace

void ScanSummary::add(int field_n, const SpectrumRecord& record) {
  ++curves_scanned;
  ++spectrum[record.S];
  ++w_histogram[record.w];
  if (!record.consistent) ++consistency_failures;
  const bool three = is_three_multiple(field_n, record.S);
  if (three) ++three_multiple_hits;
  if (three || !record.consistent || !in_allowed_set(field_n, record.S)) {
    ++violation_count;
    if (violations.size() < kStoredViolationLimit) violations.push_back(record);
  }
}

void ScanSummary::merge(const ScanSummary& other) {
  curves_scanned += other.curves_scanned;
  for (const auto& [s, count] : other.spectrum) spectrum[s] += count;
  for (const auto& [w, count] : other.w_histogram) w_histogram[w] += count;
  for (const auto& v : other.violations) {
    if (violations.size() < kStoredViolationLimit) violations.push_back(v);
  }
  violation_count += other.violation_count;
  consistency_failures += other.consistency_failures;
  three_multiple_hits += other.three_multiple_hits;
}

CurveParams draw_params(const Field& field, Xorshift64Star& rng, DPolicy policy) {
  const u64 mask = field.element_mask();
  CurveParams p;
  do {
    p.f.bits = rng.next() & mask;
  } while (p.f.bits == 0);
  p.a.bits = rng.next() & mask;
  p.b.bits = rng.next() & mask;
  p.c.bits = rng.next() & mask;
  if (policy == DPolicy::Full) p.d.bits = rng.next() & mask;
  return p;
}

std::vector<FieldElement> d_values(const Field& field, DPolicy policy) {
  if (policy == DPolicy::TwoRepresentatives) return {Field::zero(), field.trace_one_representative()};
  std::vector<FieldElement> out;
  for (u64 d = 0; d < field.order(); ++d) out.push_back({d});
  return out;
}

Field scan_field(const ScanConfig& cfg) {
  return Field::make(cfg.n, cfg.modulus.value_or(gf2x::default_modulus(cfg.n)));
}

void validate(const ScanConfig& cfg) {
  if (cfg.mode == ScanMode::Exhaustive && cfg.n > kExhaustiveDefaultMaxN && !cfg.allow_large) {
    throw Error(Errc::BadInput, "exhaustive scans beyond n = " + std::to_string(kExhaustiveDefaultMaxN) +
                                    " need the override flag");
  }
  if (cfg.mode == ScanMode::Sample && cfg.sample_size == 0) throw Error(Errc::BadInput, "sample size must be positive");
  if (cfg.mode == ScanMode::Exhaustive && cfg.n > kernels::PowerTable::kMaxN) {
    throw Error(Errc::FieldTooLarge, "exhaustive scans need n <= " + std::to_string(kernels::PowerTable::kMaxN));
  }
  if (cfg.n > kDefaultExhaustiveCap) {
    throw Error(Errc::FieldTooLargeForExhaustiveSum, "n = " + std::to_string(cfg.n));
  }
}

// ---------------------------------------------------------------- serial reference

ScanSummary scan_serial(const Field& field, const ScanConfig& cfg, const RecordSink& sink) {
  ScanSummary summary;
  summary.n = field.n();
  summary.seed = cfg.mode == ScanMode::Sample ? cfg.seed : 0;
  const auto ds = d_values(field, cfg.d_policy);

  auto visit = [&](const CurveParams& params) {
    const std::int64_t S = kernels::char_sum_serial(field, params);
    const FormProfile profile = classify_form(field, {params.f, params.a, params.b, params.c}, -1);
    const SpectrumRecord record = make_record(field, params, S, profile);
    summary.add(field.n(), record);
    if (sink) sink(record);
  };

  if (cfg.mode == ScanMode::Exhaustive) {
    const u64 q = field.order();
    for (u64 f = 1; f < q; ++f) {
      for (u64 a = 0; a < q; ++a) {
        for (u64 b = 0; b < q; ++b) {
          for (u64 c = 0; c < q; ++c) {
            for (const FieldElement d : ds) visit({{f}, {a}, {b}, {c}, d});
          }
        }
      }
    }
  } else {
    Xorshift64Star rng(cfg.seed);
    for (std::uint64_t i = 0; i < cfg.sample_size; ++i) {
      const CurveParams drawn = draw_params(field, rng, cfg.d_policy);
      if (cfg.d_policy == DPolicy::Full) {
        visit(drawn);
      } else {
        for (const FieldElement d : ds) {
          CurveParams p = drawn;
          p.d = d;
          visit(p);
        }
      }
    }
  }
  return summary;
}

// ---------------------------------------------------------------- parallel

namespace {

struct Slot {
  ScanSummary summary;
  std::vector<SpectrumRecord> records;
};

ScanSummary exhaustive_parallel(const Field& field, const ScanConfig& cfg, const RecordSink& sink) {
  const u64 q = field.order();
  const kernels::PowerTable powers(field);
  const auto ds = d_values(field, cfg.d_policy);
  std::vector<int> d_trace;
  for (const FieldElement d : ds) d_trace.push_back(field.trace(d));
  std::vector<std::size_t> dual_of_c(static_cast<std::size_t>(q));
  for (u64 c = 0; c < q; ++c) dual_of_c[c] = static_cast<std::size_t>(field.trace_dual({c}));

  ScanSummary total;
  total.n = field.n();
  const int threads = thread_count(cfg.workers);
  const bool keep = static_cast<bool>(sink);

  // Each round hands one f to each worker; records are emitted in f order.
  for (u64 f0 = 1; f0 < q; f0 += static_cast<u64>(threads)) {
    const auto count = static_cast<std::int64_t>(std::min<u64>(static_cast<u64>(threads), q - f0));
    std::vector<Slot> slots(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static, 1) num_threads(threads)
    for (std::int64_t k = 0; k < count; ++k) {
      Slot& slot = slots[static_cast<std::size_t>(k)];
      slot.summary.n = field.n();
      const FieldElement f{f0 + static_cast<u64>(k)};
      std::vector<std::int64_t> sums;
      for (u64 a = 0; a < q; ++a) {
        for (u64 b = 0; b < q; ++b) {
          const FormFamily family(field, f, {a}, {b});
          kernels::c_free_signs(field, powers, f, {a}, {b}, sums);
          kernels::walsh_hadamard(sums);
          for (u64 c = 0; c < q; ++c) {
            const std::int64_t S0 = sums[dual_of_c[c]];
            const FormProfile profile = family.profile({c});
            for (std::size_t i = 0; i < ds.size(); ++i) {
              const CurveParams params{f, {a}, {b}, {c}, ds[i]};
              const SpectrumRecord record = make_record(field, params, d_trace[i] ? -S0 : S0, profile);
              slot.summary.add(field.n(), record);
              if (keep) slot.records.push_back(record);
            }
          }
        }
      }
    }
    for (const Slot& slot : slots) {
      total.merge(slot.summary);
      if (keep) {
        for (const auto& r : slot.records) sink(r);
      }
    }
  }
  return total;
}

ScanSummary sample_parallel(const Field& field, const ScanConfig& cfg, const RecordSink& sink) {
  std::optional<kernels::PowerTable> powers;
  if (field.n() <= kernels::PowerTable::kMaxN) powers.emplace(field);
  const auto ds = d_values(field, cfg.d_policy);
  const int threads = thread_count(cfg.workers);
  const bool keep = static_cast<bool>(sink);

  ScanSummary total;
  total.n = field.n();
  total.seed = cfg.seed;
  Xorshift64Star rng(cfg.seed);
  std::vector<CurveParams> block;
  for (std::uint64_t done = 0; done < cfg.sample_size;) {
    const std::uint64_t size = std::min(kSampleBlock, cfg.sample_size - done);
    block.clear();
    for (std::uint64_t i = 0; i < size; ++i) block.push_back(draw_params(field, rng, cfg.d_policy));
    done += size;

    std::vector<Slot> slots(static_cast<std::size_t>(threads));
    std::vector<std::vector<SpectrumRecord>> records(keep ? block.size() : 0);
#pragma omp parallel num_threads(threads)
    {
#ifdef _OPENMP
      Slot& slot = slots[static_cast<std::size_t>(omp_get_thread_num())];
#else
      Slot& slot = slots[0];
#endif
      slot.summary.n = field.n();
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(block.size()); ++i) {
        const CurveParams drawn = block[static_cast<std::size_t>(i)];
        CurveParams base = drawn;
        base.d = Field::zero();
        const std::int64_t S0 = powers ? kernels::char_sum_table(field, *powers, base)
                                       : kernels::char_sum_parallel(field, base, 1);
        const FormProfile profile = FormFamily(field, drawn.f, drawn.a, drawn.b).profile(drawn.c);
        auto emit = [&](const CurveParams& params) {
          const std::int64_t S = field.trace(params.d) ? -S0 : S0;
          const SpectrumRecord record = make_record(field, params, S, profile);
          slot.summary.add(field.n(), record);
          if (keep) records[static_cast<std::size_t>(i)].push_back(record);
        };
        if (cfg.d_policy == DPolicy::Full) {
          emit(drawn);
        } else {
          for (const FieldElement d : ds) {
            CurveParams p = drawn;
            p.d = d;
            emit(p);
          }
        }
      }
    }
    // Violation lists are merged in slot order, so only counts are order-free.
    for (const Slot& slot : slots) total.merge(slot.summary);
    if (keep) {
      for (const auto& per_sample : records) {
        for (const auto& r : per_sample) sink(r);
      }
    }
  }
  return total;
}

}  // namespace

ScanSummary scan_parallel(const Field& field, const ScanConfig& cfg, const RecordSink& sink) {
  if (cfg.mode == ScanMode::Exhaustive) return exhaustive_parallel(field, cfg, sink);
  return sample_parallel(field, cfg, sink);
}

ScanSummary cmd_scan(const ScanConfig& cfg) {
  validate(cfg);
  const Field field = scan_field(cfg);
  if (cfg.output_path.empty()) return scan_parallel(field, cfg);

  std::ofstream out(cfg.output_path);
  if (!out) throw Error(Errc::BadInput, "cannot open " + cfg.output_path);
  if (cfg.format == OutputFormat::Csv) out << io::kRecordCsvHeader << '\n';
  const RecordSink sink = [&](const SpectrumRecord& r) {
    if (cfg.format == OutputFormat::Csv) {
      out << io::to_csv_row(r) << '\n';
    } else {
      out << io::to_json(r).dump() << '\n';
    }
  };
  ScanSummary summary = scan_parallel(field, cfg, sink);
  out.flush();
  if (!out) throw Error(Errc::BadInput, "write to " + cfg.output_path + " failed");
  return summary;
}

io::json to_json(const ScanSummary& s) {
  io::json spectrum = io::json::object();
  for (const auto& [value, count] : s.spectrum) spectrum[std::to_string(value)] = count;
  io::json w_hist = io::json::object();
  for (const auto& [w, count] : s.w_histogram) w_hist[std::to_string(w)] = count;
  io::json violations = io::json::array();
  for (const auto& v : s.violations) violations.push_back(io::to_json(v));
  return {{"n", s.n},
          {"seed", s.seed},
          {"curves_scanned", std::to_string(s.curves_scanned)},
          {"spectrum", spectrum},
          {"w_histogram", w_hist},
          {"violation_count", s.violation_count},
          {"consistency_failures", s.consistency_failures},
          {"three_multiple_hits", s.three_multiple_hits},
          {"violations", violations},
          {"ok", s.ok()}};
}

// ---------------------------------------------------------------- examples

std::vector<GoldenCurve> golden_curves() {
  return {
      {"x^9 + w^512 x^5 + w^118 x^3", 0, 512, 118, std::nullopt, 256},
      {"w^9 x^9 + w^517 x^5 + w^121 x^3 + w^24 x", 9, 517, 121, 24, -256},
      {"x^9 + w^520 x^5 + w^117 x^3 + w^14 x", 0, 520, 117, 14, 128},
      {"x^9 + w^520 x^5 + w^117 x^3 + w^15 x", 0, 520, 117, 15, -128},
  };
}

CurveParams golden_params(const Field& field, const GoldenCurve& curve) {
  const auto power = [&](const std::optional<u64>& e) {
    return e ? field.pow(Field::x(), *e) : Field::zero();
  };
  return {power(curve.f), power(curve.a), power(curve.b), power(curve.c), Field::zero()};
}

std::vector<ExampleResult> run_examples(u64 modulus) {
  const Field field = Field::make(11, modulus);
  std::vector<ExampleResult> out;
  for (const GoldenCurve& curve : golden_curves()) {
    ExampleResult r;
    r.curve = curve;
    r.record = classify_curve(field, golden_params(field, curve));
    r.ok = r.record.S == curve.expected_S;
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------- zeta

ZetaReport cmd_zeta(int n, int degree) {
  ZetaReport report;
  report.n = n;
  report.degree = degree;
  const int g = degree / 2;
  report.serre_bound = hw_serre_bound(g, n);
  mpz_class sqrt2q;
  mpz_ui_pow_ui(sqrt2q.get_mpz_t(), 2, static_cast<unsigned long>((n + 1) / 2));

  const auto all = enumerate_products(n, degree);
  const auto kept = filter_by_serre(all, g, n);
  for (const auto& ms : all) {
    ZetaRow row;
    row.label = ms.label();
    row.a1 = ms.a1;
    row.divisible = mpz_divisible_p(ms.a1.get_mpz_t(), sqrt2q.get_mpz_t()) != 0;
    row.a1_over_sqrt2q = row.divisible ? mpz_class(ms.a1 / sqrt2q) : mpz_class(0);
    row.survives_serre = abs(ms.a1) <= report.serre_bound;
    report.rows.push_back(row);
  }
  for (const auto& ms : kept) {
    if (mpz_divisible_p(ms.a1.get_mpz_t(), sqrt2q.get_mpz_t()) != 0) {
      report.achievable_m.insert(mpz_class(ms.a1 / sqrt2q).get_si());
    }
  }
  return report;
}

std::string to_csv(const ZetaReport& report) {
  std::ostringstream out;
  out << "multiset_label,a1,a1_over_sqrt2q,survives_serre\n";
  for (const auto& row : report.rows) {
    out << '"' << row.label << "\"," << row.a1.get_str() << ','
        << (row.divisible ? row.a1_over_sqrt2q.get_str() : std::string("non-integer")) << ','
        << (row.survives_serre ? "true" : "false") << '\n';
  }
  auto join = [](const auto& values) {
    std::string s;
    for (const long v : values) s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
  };
  out << "# n=" << report.n << " degree=" << report.degree << " serre_bound=" << report.serre_bound.get_str()
      << " achievable_m={" << join(report.achievable_m) << "} curve_allowed_m={" << join(report.curve_allowed_m)
      << "}\n";
  return out.str();
}

}  // namespace ssg4::survey
