#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace paut {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. position is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A mathematically invalid request: ring mismatch, division by zero, bad precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

class PoleError : public DomainError {
 public:
  explicit PoleError(long valuation)
      : DomainError("pole at t=0 (valuation " + std::to_string(valuation) + ")"),
        valuation_(valuation) {}
  long valuation() const { return valuation_; }

 private:
  long valuation_;
};

class NotInvertible : public DomainError {
 public:
  using DomainError::DomainError;
};

// A needed root does not lie in the base field.
class FieldExtensionRequired : public DomainError {
 public:
  explicit FieldExtensionRequired(const std::string& what)
      : DomainError("requires field extension: " + what) {}
};

}  // namespace paut
