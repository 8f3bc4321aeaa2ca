#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "ssg4/curve.hpp"
#include "ssg4/field.hpp"
#include "ssg4/quadform.hpp"
#include "ssg4/weil.hpp"

// JSON and CSV encodings. Field elements are hex strings of their coefficient
// bits (bit i = coefficient of x^i); integers that can exceed 63 bits are
// decimal strings.
namespace ssg4::io {

using json = nlohmann::json;

// {"n": 11, "modulus_hex": "0x805", "primitive_hex": "0x2"}; primitive_hex optional.
struct FieldConfig {
  int n = 0;
  u64 modulus = 0;
  std::optional<u64> primitive;
};

FieldConfig field_config_from_json(const json& j);
json to_json(const FieldConfig& config);
Field make_field(const FieldConfig& config);
// Adds trace_mask_hex and element count to the config encoding.
json describe_field(const Field& field);

json to_json(const FormProfile& profile);
json to_json(const SpectrumRecord& record);
SpectrumRecord record_from_json(const json& j);

// Constant term first, decimal strings.
json to_json(const IntPoly& poly);
IntPoly poly_from_json(const json& j);

inline constexpr const char* kRecordCsvHeader = "f,a,b,c,d,S,N,w,q_vanishes_on_W,consistent";
std::string to_csv_row(const SpectrumRecord& record);

}  // namespace ssg4::io
