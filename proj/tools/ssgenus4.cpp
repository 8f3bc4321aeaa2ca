// ssgenus4: point counts of y^2 + y = f x^9 + a x^5 + b x^3 + c x + d over F_{2^n}.
//
// Exit status: 0 all invariants held, 1 violation or mismatch, 2 usage or
// configuration error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ssg4/curve.hpp"
#include "ssg4/io.hpp"
#include "ssg4/quadform.hpp"
#include "ssg4/survey.hpp"

namespace {

using namespace ssg4;
using io::json;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

Field field_from_flags(int n, const std::string& modulus_hex, const std::string& primitive_hex,
                       const std::string& config_path) {
  io::FieldConfig cfg;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw Error(Errc::BadInput, "cannot read " + config_path);
    cfg = io::field_config_from_json(json::parse(in));
  } else {
    cfg.n = n;
    cfg.modulus = modulus_hex.empty() ? gf2x::default_modulus(n) : parse_hex(modulus_hex);
  }
  if (!primitive_hex.empty()) cfg.primitive = parse_hex(primitive_hex);
  return io::make_field(cfg);
}

int run_examples(const std::string& modulus_hex, bool as_json) {
  const u64 modulus = modulus_hex.empty() ? survey::kGoldenModulus : parse_hex(modulus_hex);
  const auto results = survey::run_examples(modulus);
  bool all_ok = true;
  if (as_json) {
    for (const auto& r : results) {
      std::cout << json{{"curve", r.curve.name}, {"expected", r.curve.expected_S}, {"got", r.record.S}, {"ok", r.ok}}
                       .dump()
                << '\n';
      all_ok = all_ok && r.ok;
    }
  } else {
    std::cout << "field F_2^11, modulus " << to_hex(modulus) << ", w = x\n";
    for (const auto& r : results) {
      std::cout << (r.ok ? "ok    " : "FAIL  ") << "S = " << r.record.S << " (expected " << r.curve.expected_S
                << ", N = " << r.record.N << ", w = " << r.record.w << ")  y^2 + y = " << r.curve.name << '\n';
      all_ok = all_ok && r.ok;
    }
  }
  return all_ok ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point counts of genus-4 hyperelliptic supersingular curves over F_2^n"};
  app.require_subcommand(1);

  int n = 11;
  std::string modulus_hex, primitive_hex, config_path;

  auto* field_cmd = app.add_subcommand("field", "Validate and describe a field");
  field_cmd->add_option("--n", n, "Extension degree (odd, 3..63)");
  field_cmd->add_option("--modulus", modulus_hex, "Irreducible modulus, hex (bit i = x^i)");
  field_cmd->add_option("--primitive", primitive_hex, "Generator to validate, hex");
  field_cmd->add_option("--config", config_path, "Field config JSON file");

  bool examples_json = false;
  auto* examples_cmd = app.add_subcommand("examples", "Reproduce the four n = 11 golden curves");
  examples_cmd->add_flag("--json", examples_json, "One JSON record per curve");
  examples_cmd->add_option("--modulus", modulus_hex, "Override the degree-11 modulus");

  std::string f_hex = "0x1", a_hex = "0x0", b_hex = "0x0", c_hex = "0x0", d_hex = "0x0";
  bool with_profile = false;
  auto* classify_cmd = app.add_subcommand("classify", "Classify one curve");
  classify_cmd->add_option("--n", n, "Extension degree")->required();
  classify_cmd->add_option("--modulus", modulus_hex, "Irreducible modulus, hex");
  classify_cmd->add_option("--f", f_hex);
  classify_cmd->add_option("--a", a_hex);
  classify_cmd->add_option("--b", b_hex);
  classify_cmd->add_option("--c", c_hex);
  classify_cmd->add_option("--d", d_hex);
  classify_cmd->add_flag("--profile", with_profile, "Also print the quadratic-form profile");

  survey::ScanConfig scan;
  std::string mode = "exhaustive", format = "csv", d_policy = "two";
  auto* scan_cmd = app.add_subcommand("scan", "Spectrum scan over many curves");
  scan_cmd->add_option("--n", scan.n, "Extension degree")->required();
  scan_cmd->add_option("--modulus", modulus_hex, "Irreducible modulus, hex");
  scan_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sample"}));
  scan_cmd->add_option("--samples", scan.sample_size, "Sample count (sample mode)");
  scan_cmd->add_option("--seed", scan.seed, "xorshift64* seed (sample mode)");
  scan_cmd->add_option("--workers", scan.workers, "OpenMP threads (0 = default)");
  scan_cmd->add_option("--d-policy", d_policy, "two: d in {0, delta}; full: every d")
      ->check(CLI::IsMember({"two", "full"}));
  scan_cmd->add_option("--out", scan.output_path, "Per-curve output file");
  scan_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "jsonl"}));
  scan_cmd->add_flag("--allow-large", scan.allow_large, "Permit exhaustive scans beyond n = 7");

  int degree = 8;
  auto* zeta_cmd = app.add_subcommand("zeta", "Enumerate supersingular Weil polynomial products");
  zeta_cmd->add_option("--n", n, "Extension degree")->required();
  zeta_cmd->add_option("--degree", degree, "Total degree of the products");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*field_cmd) {
      const Field field = field_from_flags(n, modulus_hex, primitive_hex, config_path);
      json j = io::describe_field(field);
      j["x_is_primitive"] = field.is_primitive(Field::x());
      std::cout << j.dump(2) << '\n';
      return 0;
    }
    if (*examples_cmd) return run_examples(modulus_hex, examples_json);
    if (*classify_cmd) {
      const Field field = field_from_flags(n, modulus_hex, "", "");
      const CurveParams params{field.element(parse_hex(f_hex)), field.element(parse_hex(a_hex)),
                               field.element(parse_hex(b_hex)), field.element(parse_hex(c_hex)),
                               field.element(parse_hex(d_hex))};
      const SpectrumRecord record = classify_curve(field, params);
      json j = io::to_json(record);
      if (with_profile) j["profile"] = io::to_json(classify_form(field, {params.f, params.a, params.b, params.c}));
      std::cout << j.dump() << '\n';
      return record.consistent && in_allowed_set(field.n(), record.S) ? 0 : kExitViolation;
    }
    if (*scan_cmd) {
      if (!modulus_hex.empty()) scan.modulus = parse_hex(modulus_hex);
      scan.mode = mode == "sample" ? survey::ScanMode::Sample : survey::ScanMode::Exhaustive;
      scan.format = format == "jsonl" ? survey::OutputFormat::JsonLines : survey::OutputFormat::Csv;
      scan.d_policy = d_policy == "full" ? survey::DPolicy::Full : survey::DPolicy::TwoRepresentatives;
      const survey::ScanSummary summary = survey::cmd_scan(scan);
      json j = survey::to_json(summary);
      j["mode"] = mode;
      std::cout << j.dump(2) << '\n';
      return summary.ok() ? 0 : kExitViolation;
    }
    if (*zeta_cmd) {
      std::cout << survey::to_csv(survey::cmd_zeta(n, degree));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
