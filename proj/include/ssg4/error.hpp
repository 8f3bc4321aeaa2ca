#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ssg4 {

enum class Errc {
  NEven,
  NOutOfRange,
  ReducibleModulus,
  WrongDegree,
  NotPrimitive,
  DivisionByZero,
  FieldTooLarge,
  FieldTooLargeForExhaustiveSum,
  NotGenusFour,
  InvalidParams,
  MalformedWeilPoly,
  NotReducible,
  ZeroPolynomial,
  BadInput,
};

std::string_view to_string(Errc code);

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ssg4
