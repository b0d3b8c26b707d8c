#pragma once

#include <stdexcept>
#include <string>

namespace vkp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed Gauss-code or flat-code token.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Token sequence that does not describe a Gauss diagram.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(int label)
      : Error("unknown chord label " + std::to_string(label)), label_(label) {}
  int label() const noexcept { return label_; }

 private:
  int label_;
};

class NotIntersecting : public Error {
 public:
  using Error::Error;
};

class BadModulus : public Error {
 public:
  using Error::Error;
};

/// A_i was requested with i = 0.
class ZeroIndex : public Error {
 public:
  using Error::Error;
};

/// V_i or S_i was requested with i < 1.
class BadIndex : public Error {
 public:
  using Error::Error;
};

/// Index tuple is empty, not strictly increasing, or contains a forbidden entry.
class BadTuple : public Error {
 public:
  using Error::Error;
};

class InapplicableMove : public Error {
 public:
  using Error::Error;
};

class SingularChord : public Error {
 public:
  using Error::Error;
};

class IncompleteResolution : public Error {
 public:
  using Error::Error;
};

class NoSingularChords : public Error {
 public:
  using Error::Error;
};

/// A runtime self-check failed; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace vkp
