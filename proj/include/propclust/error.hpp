#pragma once

#include <stdexcept>
#include <string>

namespace propclust {

/// Error raised for invalid inputs and violated preconditions. `code` is a short
/// machine-readable tag such as "metric undefined" or "insufficient targets".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace propclust
