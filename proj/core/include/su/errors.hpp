#ifndef SU_ERRORS_HPP
#define SU_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace su {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed formula, sequent, frame file or model file.  `offset` is the
// byte position of the offending token when the input is a single string,
// or the line number for line-based file formats.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A configured cap (upset count, enumeration size, instance universe, ...)
// would be exceeded.  Never silently truncated.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

// An operation's stated precondition does not hold (frame not S4, point out
// of range, witness not a genuine failure witness, ...).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// A certified construction failed its own verification step.  Raised instead
// of returning an unchecked result.
class PostcheckError : public Error {
 public:
  explicit PostcheckError(const std::string& what) : Error(what) {}
};

}  // namespace su

#endif  // SU_ERRORS_HPP
