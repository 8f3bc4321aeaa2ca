#include "ssg4/io.hpp"

#include <sstream>

namespace ssg4::io {

namespace {

u64 hex_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw Error(Errc::BadInput, std::string("missing hex string '") + key + "'");
  }
  return parse_hex(j.at(key).get<std::string>());
}

}  // namespace

FieldConfig field_config_from_json(const json& j) {
  FieldConfig c;
  if (!j.contains("n") || !j.at("n").is_number_integer()) throw Error(Errc::BadInput, "missing integer 'n'");
  c.n = j.at("n").get<int>();
  if (j.contains("modulus_hex")) {
    c.modulus = hex_field(j, "modulus_hex");
  } else {
    c.modulus = gf2x::default_modulus(c.n);
  }
  if (j.contains("primitive_hex") && !j.at("primitive_hex").is_null()) c.primitive = hex_field(j, "primitive_hex");
  return c;
}

json to_json(const FieldConfig& config) {
  json j = {{"n", config.n}, {"modulus_hex", to_hex(config.modulus)}};
  if (config.primitive) j["primitive_hex"] = to_hex(*config.primitive);
  return j;
}

Field make_field(const FieldConfig& config) { return Field::make(config.n, config.modulus, config.primitive); }

json describe_field(const Field& field) {
  json j = {{"n", field.n()},
            {"modulus_hex", to_hex(field.modulus())},
            {"trace_mask_hex", to_hex(field.trace_mask())},
            {"order", std::to_string(field.order())}};
  if (field.primitive()) j["primitive_hex"] = to_hex(*field.primitive());
  return j;
}

json to_json(const FormProfile& p) {
  json basis = json::array();
  for (const auto& u : p.W_basis) basis.push_back(to_hex(u));
  json j = {{"w", p.w},
            {"q_vanishes_on_W", p.q_vanishes_on_W},
            {"dim_W0", p.dim_W0},
            {"rank_B", p.rank_B},
            {"rank_Q", p.rank_Q},
            {"predicted_abs_S", std::to_string(p.predicted_abs_S)},
            {"W_basis", basis}};
  if (p.M) j["M"] = std::to_string(*p.M);
  return j;
}

json to_json(const SpectrumRecord& r) {
  return {{"f", to_hex(r.params.f)},
          {"a", to_hex(r.params.a)},
          {"b", to_hex(r.params.b)},
          {"c", to_hex(r.params.c)},
          {"d", to_hex(r.params.d)},
          {"S", r.S},
          {"N", std::to_string(r.N)},
          {"w", r.w},
          {"q_vanishes_on_W", r.q_vanishes_on_W},
          {"consistent", r.consistent}};
}

SpectrumRecord record_from_json(const json& j) {
  SpectrumRecord r;
  r.params = {{hex_field(j, "f")}, {hex_field(j, "a")}, {hex_field(j, "b")}, {hex_field(j, "c")}, {hex_field(j, "d")}};
  r.S = j.at("S").get<std::int64_t>();
  r.N = std::stoull(j.at("N").get<std::string>());
  r.w = j.at("w").get<int>();
  r.q_vanishes_on_W = j.at("q_vanishes_on_W").get<bool>();
  r.consistent = j.at("consistent").get<bool>();
  return r;
}

json to_json(const IntPoly& poly) {
  json j = json::array();
  for (const auto& c : poly.coeffs()) j.push_back(c.get_str());
  return j;
}

IntPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::BadInput, "polynomial must be a JSON array");
  std::vector<mpz_class> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw Error(Errc::BadInput, "coefficients must be decimal strings");
    mpz_class v;
    if (v.set_str(c.get<std::string>(), 10) != 0) throw Error(Errc::BadInput, "bad coefficient " + c.dump());
    coeffs.push_back(v);
  }
  return IntPoly(std::move(coeffs));
}

std::string to_csv_row(const SpectrumRecord& r) {
  std::ostringstream out;
  out << to_hex(r.params.f) << ',' << to_hex(r.params.a) << ',' << to_hex(r.params.b) << ','
      << to_hex(r.params.c) << ',' << to_hex(r.params.d) << ',' << r.S << ',' << r.N << ',' << r.w << ','
      << (r.q_vanishes_on_W ? "true" : "false") << ',' << (r.consistent ? "true" : "false");
  return out.str();
}

}  // namespace ssg4::io
