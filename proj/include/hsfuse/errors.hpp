#pragma once

#include <stdexcept>

namespace hsfuse {

// Bad arguments / contract violations at API boundaries.
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed or unsupported on-disk data.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem-level failures (missing file, short read, failed write).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical breakdown: NaN iterates, non-convergent factorizations,
// singular systems.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hsfuse
