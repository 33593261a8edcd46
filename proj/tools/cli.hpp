#pragma once

#include <optional>
#include <ostream>
#include <string_view>

#include "trigsum/exponent.hpp"

namespace trigsum::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kDomainError = 2,
  kDivergent = 3,
  kUsage = 64,
  kIoError = 74,
};

/// "90deg", "1.5708rad" or a bare number in radians.
std::optional<Angle> parse_angle(std::string_view text);

/// Entry point of the trigsum tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trigsum::cli
