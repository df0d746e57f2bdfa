#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordseq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A group, field or enumeration would exceed a configured size cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// Malformed group expression, sequence text or partition text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position, std::string token)
      : Error(message + " at position " + std::to_string(position) +
              (token.empty() ? std::string{} : " near '" + token + "'")),
        position_(position),
        token_(std::move(token)) {}

  std::size_t position() const { return position_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t position_;
  std::string token_;
};

// A documented precondition failed. `kind()` names the violated contract,
// e.g. "LengthMismatch", "NotNormal", "ActionNotAutomorphism".
class PreconditionError : public Error {
 public:
  PreconditionError(std::string kind, const std::string& message)
      : Error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

}  // namespace ordseq
