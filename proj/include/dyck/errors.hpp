#pragma once

#include <stdexcept>
#include <string>

namespace dyck {

/// Thrown when a request exceeds a configured resource cap (tree size, oracle size).
class CapExceeded : public std::length_error {
 public:
  CapExceeded(const std::string& what, int requested, int cap)
      : std::length_error(what + ": n=" + std::to_string(requested) +
                          " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  int requested() const noexcept { return requested_; }
  int cap() const noexcept { return cap_; }

 private:
  int requested_;
  int cap_;
};

/// A generator operation was invoked while its precondition does not hold.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dyck
