#pragma once

#include <stdexcept>
#include <string>

namespace snni {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: unknown identifiers, bad partitions,
/// vectors of the wrong size.
class InputError : public Error {
public:
  using Error::Error;
};

/// A transition was fired at a marking that does not enable it.
class FiringError : public Error {
public:
  FiringError(const std::string& what, std::size_t step_index)
      : Error(what), step_index_(step_index) {}

  /// Position of the offending step inside a fired sequence (0 for a
  /// single firing).
  std::size_t step_index() const noexcept { return step_index_; }

private:
  std::size_t step_index_;
};

/// The net violates boundedness or implicit-subnet acyclicity, so the
/// basis-marking constructions refuse to run.
class AssumptionError : public Error {
public:
  using Error::Error;
};

/// An exploration budget (marking cap, node cap, sequence cap) ran out
/// before a verdict was reached.
class CapacityError : public Error {
public:
  using Error::Error;
};

/// Net document could not be parsed or validated.
class FormatError : public InputError {
public:
  using InputError::InputError;
};

}  // namespace snni
