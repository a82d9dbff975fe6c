#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace k3br {

/// Bad user input: non-squarefree discriminant, non-integral ideal where an
/// integral one is required, malformed literal, ...
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ideal or lattice literal. Carries the byte offset of the
/// offending token.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& msg, std::size_t position, std::string token)
      : ValidationError(msg + " at position " + std::to_string(position) +
                        " (near '" + token + "')"),
        message_(msg),
        position_(position),
        token_(std::move(token)) {}

  /// The same error reported `offset` characters further into an outer string.
  ParseError shifted(std::size_t offset) const { return {message_, position_ + offset, token_}; }

  std::size_t position() const { return position_; }
  const std::string& token() const { return token_; }

 private:
  std::string message_;
  std::size_t position_;
  std::string token_;
};

/// A brute-force residue enumeration would exceed the configured bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A formula produced a value it provably cannot (non-integral order, genus
/// mismatch). Always a bug, never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace k3br
