#pragma once

#include <stdexcept>
#include <string>

namespace bethe {

// Base for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatchError : public Error {
 public:
  using Error::Error;
};

class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NotCommutingError : public Error {
 public:
  using Error::Error;
};

class PrecisionInsufficientError : public Error {
 public:
  using Error::Error;
};

class RepeatedPointError : public Error {
 public:
  explicit RepeatedPointError(const std::string& what)
      : Error(what + " (coinciding points need Weyl modules, which are not supported)") {}
};

class InvalidWeightError : public Error {
 public:
  using Error::Error;
};

class BoundExceededError : public Error {
 public:
  using Error::Error;
};

// A finitely checkable identity came out false. Should never fire.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

// Random input was degenerate; the caller may redraw.
class GenericityFailure : public Error {
 public:
  using Error::Error;
};

class IndicialError : public Error {
 public:
  using Error::Error;
};

}  // namespace bethe
