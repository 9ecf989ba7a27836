#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vreg {

/// Input outside an operation's domain. Maps to CLI exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configurable size cap was exceeded (enumeration, sieve).
class CapExceeded : public InvalidInput {
 public:
  CapExceeded(const std::string& what, std::uint64_t cap)
      : InvalidInput(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

/// A result or intermediate does not fit the arithmetic width.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A bounded search ran out of steps. Says nothing about existence.
class NotFound : public std::runtime_error {
 public:
  NotFound(const std::string& what, std::uint64_t steps_tried)
      : std::runtime_error(what + " after " + std::to_string(steps_tried) +
                           " steps"),
        steps_tried_(steps_tried) {}

  std::uint64_t steps_tried() const noexcept { return steps_tried_; }

 private:
  std::uint64_t steps_tried_;
};

}  // namespace vreg
