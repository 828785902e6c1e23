#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qjones {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (braid words, polynomial strings, corpus files).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at token " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A mathematically invalid request, e.g. a braid whose closure is a link.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The closure of a braid has more than one component.
class NotAKnotError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative procedure hit its hard cap before its stopping rule fired.
class UnterminatedError : public Error {
 public:
  using Error::Error;
};

}  // namespace qjones
