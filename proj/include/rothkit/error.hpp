#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rothkit {

/// Raised when an input violates the mathematical preconditions of an
/// operation (bad tuple, wrong rank, missing parameter, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two Chow classes from different rings were combined.
class ContextMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Syntax error in a ring expression. `offset` is a byte offset into the
/// input; it equals the input length for errors at end of input.
class ParseError : public DomainError {
 public:
  ParseError(std::size_t offset, std::string token, const std::string& what)
      : DomainError(what), offset_(offset), token_(std::move(token)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t offset_;
  std::string token_;
};

}  // namespace rothkit
