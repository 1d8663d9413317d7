#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revlang {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed regex, formula or file. `offset` is the byte position in the
/// input, or `npos` when no position applies.
class ParseError : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit ParseError(const std::string& message, std::size_t offset = npos)
      : Error(offset == npos ? message
                             : message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A first-order variable used where a set variable is required, or vice versa.
class SortError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Foreign letter, invalid alphabet declaration, or mismatched alphabets.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

/// A configured size or length cap was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NotReversible : public Error {
 public:
  using Error::Error;
};

/// An involution axiom failed on a constructed table. Always an internal bug.
class InvolutionInconsistent : public Error {
 public:
  using Error::Error;
};

}  // namespace revlang
