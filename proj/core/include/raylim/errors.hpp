#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace raylim {

/// Domain error with a stable machine-readable code ("RootFindingFailed",
/// "BranchAmbiguous", ...). The CLI maps these to structured JSON on stderr.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

} // namespace raylim
