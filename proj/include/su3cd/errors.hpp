#pragma once

#include <stdexcept>
#include <string>

namespace su3cd {

// An enumeration or search grew past its configured size cap.
struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check failed; indicates a bug rather than bad input.
struct VerificationError : std::runtime_error {
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace su3cd
