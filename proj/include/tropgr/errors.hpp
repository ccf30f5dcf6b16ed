#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropgr {

struct DivisionByZero : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parse failure; offset is the byte position in the input text.
struct SyntaxError : std::runtime_error {
  std::size_t offset;
  SyntaxError(const std::string& what, std::size_t off)
      : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"),
        offset(off) {}
};

struct RankDeficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSaturated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotTreeMetric : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidTree : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoConeFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IncompatibleInputs : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A coordinate with value -inf was inverted or raised to a negative power.
struct LocalizationViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CertificateFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tropgr
