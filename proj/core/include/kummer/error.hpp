#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kummer {

enum class ErrorCode {
  kInvalidArgument,
  kNonCoprime,
  kCharDividesM,
  kUnsupportedPlace,
  kNotUrPlusOne,
  kTooManyPlaces,
  kSOutOfRange,
  kBoxNotPure,
  kDegreeOutOfRange,
  kOverflow,
};

std::string_view to_string(ErrorCode code);

// All validation failures in the library surface as this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kummer
