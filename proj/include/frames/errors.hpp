#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace frames {

using Element = std::size_t;

/// Base class for every error raised by the library.
class FrameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown label, duplicate label, bad file, bad relation.
class InvalidInput : public FrameError {
 public:
  using FrameError::FrameError;
};

class CycleDetected : public FrameError {
 public:
  explicit CycleDetected(std::vector<std::string> cycle);
  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

/// Some pair lacks a meet or a join.
class NotALattice : public FrameError {
 public:
  enum class Missing { Meet, Join, Bounds };
  NotALattice(Missing missing, Element x, Element y, const std::string& what);
  Missing missing() const noexcept { return missing_; }
  Element x() const noexcept { return x_; }
  Element y() const noexcept { return y_; }

 private:
  Missing missing_;
  Element x_;
  Element y_;
};

/// x ∧ (y ∨ z) != (x ∧ y) ∨ (x ∧ z) for the witness triple.
class NotDistributive : public FrameError {
 public:
  NotDistributive(std::array<Element, 3> witness, const std::string& what);
  const std::array<Element, 3>& witness() const noexcept { return witness_; }

 private:
  std::array<Element, 3> witness_;
};

class NotAFrameMap : public FrameError {
 public:
  using FrameError::FrameError;
};

class BudgetExceeded : public FrameError {
 public:
  BudgetExceeded(std::size_t limit, const std::string& what);
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

/// The one-element frame (0 = 1) where a construction needs 0 != 1.
class DegenerateFrame : public FrameError {
 public:
  using FrameError::FrameError;
};

}  // namespace frames
