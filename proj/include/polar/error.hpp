#pragma once

#include <stdexcept>
#include <string>

namespace polar {

// Computation error carrying a short machine-readable code such as
// "ordering-broken" or "step-too-large".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace polar
