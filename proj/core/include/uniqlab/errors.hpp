#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uniqlab {

/// Raised when an operation is called with arguments outside its domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical routine cannot produce a trustworthy answer.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RadiusExceededError : public PreconditionError {
 public:
  RadiusExceededError(double radius, double limit);
  double radius() const noexcept { return radius_; }
  double limit() const noexcept { return limit_; }

 private:
  double radius_;
  double limit_;
};

class WindowEmptyError : public PreconditionError {
 public:
  WindowEmptyError(std::size_t block, std::size_t slot, double lo, double hi);
  std::size_t block() const noexcept { return block_; }
  std::size_t slot() const noexcept { return slot_; }

 private:
  std::size_t block_;
  std::size_t slot_;
};

}  // namespace uniqlab
