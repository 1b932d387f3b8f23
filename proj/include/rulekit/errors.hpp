#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rulekit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: malformed spec files, parse failures, curves off the dual sphere.
class InputError : public Error {
 public:
  using Error::Error;
};

// Undefined geometry or arithmetic at a particular evaluation point.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Files that cannot be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

class DivisionByPureDual : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class PureDualVector : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NotOnDualUnitSphere : public InputError {
 public:
  using InputError::InputError;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& message)
      : InputError(message), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class UnknownIdentifier : public InputError {
 public:
  UnknownIdentifier(std::string name, std::size_t offset)
      : InputError("unknown identifier '" + name + "' at offset " + std::to_string(offset)),
        name_(std::move(name)),
        offset_(offset) {}

  const std::string& name() const { return name_; }
  std::size_t offset() const { return offset_; }

 private:
  std::string name_;
  std::size_t offset_;
};

class SpecError : public InputError {
 public:
  SpecError(int line, const std::string& message)
      : InputError(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

class DomainError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class PureDualSpeed : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class PureDualCurvature : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularPoint : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularDenominator : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class InsufficientGrid : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace rulekit
