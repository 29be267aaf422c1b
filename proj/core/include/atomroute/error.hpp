#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace atomroute {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed scenario document or an instance that violates its invariants.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

// Argument outside the admissible domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Exhaustive method refused because the search space is larger than allowed.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t count, std::uint64_t cap)
      : Error(what), count_(count), cap_(cap) {}

  // Count observed when the cap tripped; a lower bound when the enumeration
  // stopped early.
  std::uint64_t count() const noexcept { return count_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t count_;
  std::uint64_t cap_;
};

// Exhaustive search found no pure equilibrium.
class NoEquilibrium : public Error {
 public:
  using Error::Error;
};

}  // namespace atomroute
