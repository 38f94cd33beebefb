#pragma once

#include <stdexcept>
#include <string>

namespace capaug {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file (bad syntax, unexpected structure).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failure; the message carries the path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace capaug
