#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mfa {

enum class ErrorKind {
  WeightSum,
  Range,
  Overlap,
  Arity,
  EmptyWord,
  Bracket,
  Domain,
  Consistency,
  Denominator,
  PrefixTooShort,
  WindowRange,
  SizeCap,
  EmptyAlphabet,
  NeedLargerN,
  NoGeometry,
  Budget,
  Parse,
  Io,
};

/// Name used when surfacing an error to users, e.g. "WeightSumError".
std::string_view error_name(ErrorKind kind) noexcept;

/// Single exception type for every computational failure in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace mfa
