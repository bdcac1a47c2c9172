#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tcover {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (out-of-range t, n < 3 for a cycle, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Malformed textual input. `offset` is the byte position where decoding failed.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};

/// An intermediate result exceeded a configured size cap.
class ResourceLimitError : public Error {
  public:
    using Error::Error;
};

/// A constructed object failed its own post-hoc check.
class VerificationError : public Error {
  public:
    using Error::Error;
};

}  // namespace tcover
