// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ssg4/curve.hpp"
#include "ssg4/quadform.hpp"
#include "ssg4/survey.hpp"
#include "ssg4/weil.hpp"
#include "support.hpp"

using namespace ssg4;
namespace t = ssg4::testing;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail, double seconds) {
  std::printf("[%s] %2d %-34s %s (%.1f s)\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <class Fn>
void run(int id, const std::string& name, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  report(id, name, ok, detail, elapsed.count());
}

CurveParams random_params(std::mt19937_64& rng, const Field& f) {
  return {{t::random_nonzero(rng, f)},
          {t::random_element(rng, f)},
          {t::random_element(rng, f)},
          {t::random_element(rng, f)},
          {t::random_element(rng, f)}};
}

std::string keys_of(const std::map<std::int64_t, std::uint64_t>& spectrum) {
  std::ostringstream s;
  s << '{';
  bool first = true;
  for (const auto& [value, count] : spectrum) {
    s << (first ? "" : " ") << value;
    first = false;
  }
  s << '}';
  return s.str();
}

// Record-level check of the quadratic-form prediction, independent of the
// library's consistent flag.
struct ProfileAudit {
  int n = 0;
  std::uint64_t checked = 0;
  std::uint64_t exceptions = 0;

  void operator()(const SpectrumRecord& r) {
    ++checked;
    bool ok = r.w % 2 == 1 && (n < 7 || r.w <= 5);
    if (r.S == 0) {
      ok = ok && !r.q_vanishes_on_W;
    } else {
      ok = ok && r.q_vanishes_on_W && std::llabs(r.S) == (std::int64_t{1} << ((n + r.w) / 2));
    }
    exceptions += !ok || !r.consistent;
  }
};

struct ScanResult {
  survey::ScanSummary summary;
  ProfileAudit audit;
};

ScanResult scan(int n, survey::ScanMode mode, std::uint64_t samples, std::uint64_t seed) {
  survey::ScanConfig cfg;
  cfg.n = n;
  cfg.mode = mode;
  cfg.sample_size = samples;
  cfg.seed = seed;
  cfg.allow_large = true;
  const Field field = survey::scan_field(cfg);
  ScanResult out;
  out.audit.n = n;
  out.summary = survey::scan_parallel(field, cfg, [&](const SpectrumRecord& r) { out.audit(r); });
  return out;
}

bool contained(int n, const survey::ScanSummary& s, std::string& detail) {
  bool ok = s.ok() && s.three_multiple_hits == 0;
  for (const auto& kv : s.spectrum) ok = ok && in_allowed_set(n, kv.first) && !is_three_multiple(n, kv.first);
  detail += "n=" + std::to_string(n) + " curves=" + std::to_string(s.curves_scanned) + " keys=" + keys_of(s.spectrum) +
            " 3-multiples=" + std::to_string(s.three_multiple_hits) + "; ";
  return ok;
}

}  // namespace

int main() {
  std::map<int, ScanResult> scans;

  run(1, "golden n=11 sums", [](std::string& d) {
    bool ok = true, negated = true;
    std::string got = "got", expected = "expected";
    for (const auto& r : survey::run_examples(0x805)) {
      got += " " + std::to_string(r.record.S);
      expected += " " + std::to_string(r.curve.expected_S);
      ok = ok && r.record.S == r.curve.expected_S;
      negated = negated && r.record.S == -r.curve.expected_S;
    }
    d = expected + ", " + got + (ok ? "" : negated ? " (every sum has the opposite sign)" : "");
    return ok;
  });

  run(2, "direct count = q + 1 + S", [](std::string& d) {
    std::mt19937_64 rng(2);
    std::uint64_t total = 0, bad = 0;
    for (int n = 3; n <= 13; n += 2) {
      const Field f = Field::standard(n);
      for (int i = 0; i < 1000; ++i) {
        const CurveParams p = random_params(rng, f);
        bad += count_points_direct(f, p) != count_points_fast(f, p);
        ++total;
      }
    }
    d = std::to_string(total) + " curves, " + std::to_string(bad) + " mismatches";
    return bad == 0;
  });

  run(3, "containment, exhaustive n=3,5", [&](std::string& d) {
    scans[3] = scan(3, survey::ScanMode::Exhaustive, 0, 0);
    scans[5] = scan(5, survey::ScanMode::Exhaustive, 0, 0);
    const bool ok3 = contained(3, scans[3].summary, d) && scans[3].summary.curves_scanned == 7168;
    const bool ok5 = contained(5, scans[5].summary, d) && scans[5].summary.curves_scanned == 31ull * 32 * 32 * 32 * 2;
    return ok3 && ok5;
  });

  run(4, "containment, sampled n=7,11", [&](std::string& d) {
    scans[7] = scan(7, survey::ScanMode::Sample, 1000000, 7);
    scans[11] = scan(11, survey::ScanMode::Sample, 100000, 11);
    const bool ok7 = contained(7, scans[7].summary, d);
    const bool ok11 = contained(11, scans[11].summary, d);
    bool occur = true;
    for (std::int64_t v : {0, 64, -64, 128, -128}) occur = occur && scans[11].summary.spectrum.count(v) > 0;
    d += occur ? "n=11 has 0, +-64, +-128" : "n=11 is missing one of 0, +-64, +-128";
    return ok7 && ok11 && occur;
  });

  run(5, "quadratic-form consistency", [&](std::string& d) {
    std::uint64_t checked = 0, exceptions = 0;
    for (const auto& [n, r] : scans) {
      checked += r.audit.checked;
      exceptions += r.audit.exceptions;
    }
    d = std::to_string(checked) + " records, " + std::to_string(exceptions) + " exceptions";
    return scans.size() == 4 && exceptions == 0;
  });

  run(6, "radical oracle = kernel of L", [](std::string& d) {
    std::mt19937_64 rng(6);
    int bad = 0, total = 0;
    for (int n : {3, 5, 7}) {
      const Field f = Field::standard(n);
      for (int i = 0; i < 100; ++i) {
        const QuadraticFormSpec spec{{t::random_nonzero(rng, f)}, {t::random_element(rng, f)},
                                     {t::random_element(rng, f)}, Field::zero()};
        const auto W = kernel_W(f, spec);
        const auto R = radical_oracle(f, spec);
        const FormProfile p = classify_form(f, spec);
        const int w = static_cast<int>(W.size());
        bad += !t::same_span(W, R) || W.size() != R.size() || p.rank_B != n - w || (n - w) % 2 != 0;
        ++total;
      }
    }
    d = std::to_string(total) + " triples, " + std::to_string(bad) + " mismatches";
    return bad == 0;
  });

  run(7, "S^2 = q * sum over W", [](std::string& d) {
    std::mt19937_64 rng(7);
    int bad = 0, total = 0;
    for (int n = 3; n <= 13; n += 2) {
      const Field f = Field::standard(n);
      for (int i = 0; i < 1000; ++i) {
        const CurveParams p = random_params(rng, f);
        const std::int64_t S = t::char_sum_oracle(f, p.f.bits, p.a.bits, p.b.bits, p.c.bits, p.d.bits);
        const QuadraticFormSpec spec{p.f, p.a, p.b, p.c};
        std::vector<u64> basis;
        for (const auto& u : kernel_W(f, spec)) basis.push_back(u.bits);
        std::int64_t sum = 0;
        for (u64 u : f2::span(basis)) sum += eval_Q(f, spec, {u}) ? -1 : 1;
        bad += S * S != static_cast<std::int64_t>(f.order()) * sum;
        ++total;
      }
    }
    d = std::to_string(total) + " curves, " + std::to_string(bad) + " mismatches";
    return bad == 0;
  });

  run(8, "supersingularity of the catalog", [](std::string& d) {
    bool ok = true;
    for (int n : {3, 5, 11}) {
      const auto catalog = simple_ss_factors(n);
      int passed = 0;
      for (const auto& p : catalog) passed += sx_check(p);
      std::vector<mpz_class> control(3);
      control[0] = mpz_class(1) << n;
      control[1] = mpz_class(1) << ((n - 1) / 2);
      control[2] = 1;
      const bool control_fails = !sx_check(make_weil_poly(IntPoly(control), n));
      d += "n=" + std::to_string(n) + " " + std::to_string(passed) + "/" + std::to_string(catalog.size()) +
           (control_fails ? " control rejected; " : " control accepted; ");
      ok = ok && catalog.size() == 12 && passed == 12 && control_fails;
    }
    return ok;
  });

  run(9, "Weil enumeration at n=3", [](std::string& d) {
    const auto all = enumerate_products(3, 8);
    const auto kept = filter_by_serre(all, 4, 3);
    std::set<long> multiples;
    bool divisible = true;
    const FactorMultiset* plus = nullptr;
    const FactorMultiset* minus = nullptr;
    int at_12 = 0;
    for (const auto& m : kept) {
      divisible = divisible && m.a1 % 4 == 0;
      if (m.a1 % 4 == 0) multiples.insert(mpz_class(m.a1 / 4).get_si());
      if (abs(m.a1) == 12) {
        ++at_12;
        if (m.label() == "(X^2+sX+q)^3*(X^2+q)") plus = &m;
        if (m.label() == "(X^2-sX+q)^3*(X^2+q)") minus = &m;
      }
    }
    bool ok = divisible && multiples == std::set<long>{-4, -3, -2, -1, 0, 1, 2, 3, 4} &&
              hw_serre_bound(4, 3) == 20 && plus && minus;
    if (minus) {
      const ReducedFrobVer r = reduced_frobver_poly(*minus);
      const IntPoly x = IntPoly::monomial(1, 1);
      const IntPoly expected = IntPoly::linear(2).pow(3) * x;
      ok = ok && r.product == expected && r.distinct_factors.size() == 2 &&
           abs(resultant(r.distinct_factors[0].first, r.distinct_factors[1].first)) == 2;
      d = "reduced " + r.product.to_string() + ", ";
    }
    d += std::to_string(kept.size()) + " multisets within 20, " + std::to_string(at_12) + " with |a1|=12";
    return ok;
  });

  run(10, "occurrence at n=3,5,7,11", [&](std::string& d) {
    bool ok = scans.size() == 4;
    for (const auto& [n, r] : scans) {
      d += "n=" + std::to_string(n) + " " + keys_of(r.summary.spectrum) + "; ";
      ok = ok && r.summary.ok() && r.summary.spectrum.count(0) > 0;
      // Values beyond +-2^((n+1)/2) need w >= 3, which the kernel bound allows for every n.
      const std::int64_t base = std::int64_t{1} << ((n + 1) / 2);
      ok = ok && r.summary.spectrum.count(base) > 0 && r.summary.spectrum.count(-base) > 0;
    }
    return ok;
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
