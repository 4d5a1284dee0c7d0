#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace netdense {

// Precondition or malformed-input failure.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested output would exceed a configured size budget. The predicted
// size is carried so callers can report it without recomputing.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t predicted)
      : std::runtime_error(what), predicted_(predicted) {}

  std::uint64_t predicted() const noexcept { return predicted_; }

 private:
  std::uint64_t predicted_;
};

}  // namespace netdense
