#pragma once

#include <stdexcept>
#include <string>

namespace rescoh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidRankError : public Error { public: using Error::Error; };
class DimensionError : public Error { public: using Error::Error; };
class InvalidRootError : public Error { public: using Error::Error; };
class RangeError : public Error { public: using Error::Error; };
class DomainError : public Error { public: using Error::Error; };
class CochainError : public Error { public: using Error::Error; };
class InvariantViolation : public Error { public: using Error::Error; };

/// Raised when a germ computation needs coefficients beyond the configured
/// truncation depth. Never silently truncated.
class PrecisionExhausted : public Error { public: using Error::Error; };

/// Malformed textual input (root specs, chamber strings, lambda lists).
/// `position` is the 0-based offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace rescoh
