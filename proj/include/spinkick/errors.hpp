#pragma once

#include <stdexcept>

namespace spinkick {

// Bad inputs: dimension mismatches, out-of-range sites, unparseable text,
// malformed scenarios. Mapped to CLI exit code 2.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A numerical guarantee failed at runtime: cycle-identity residual exceeded,
// a concurrence expectation came out non-real or negative beyond noise, and
// the like. Mapped to CLI exit code 3.
struct NumericContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace spinkick
