#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ssmguard {

// Domain error carrying a stable machine-greppable code ("E_..."), printed
// by the CLI as a single "CODE: message" line.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace ssmguard
