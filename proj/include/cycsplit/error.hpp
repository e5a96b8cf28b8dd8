// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cycsplit {

enum class Errc {
  InvalidInput,
  InvalidField,
  FieldMismatch,
  ZeroInverse,
  NotOnCurve,
  SingularCurve,
  SingularPoint,
  PrecisionExhausted,
  NonRationalIntersection,
  CommonComponent,
  NonzeroDegree,
  NoSuchOrder,
  InvalidCover,
  EssentiallyRamified,
  EmptyKernel,
  RetryExhausted,
  UnrealizableOrder,
  VerificationFailed,
  Io,
  Internal,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure in the library surfaces as this exception. `detail` carries
/// a machine-readable qualifier (failing check name, offending value).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::string detail = {})
      : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace cycsplit
