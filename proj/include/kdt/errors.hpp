#pragma once

#include <stdexcept>
#include <string>

namespace kdt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JacobiViolation : Error { using Error::Error; };
struct NotContact : Error { using Error::Error; };
struct TruncationOverflow : Error { using Error::Error; };
struct BadWeightIndex : Error { using Error::Error; };
// The linear systems that raise this are consistent by construction, so it
// signals a bug rather than bad input.
struct SolveFailure : Error { using Error::Error; };
struct BadConfig : Error { using Error::Error; };

}  // namespace kdt
