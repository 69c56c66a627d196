#pragma once

#include <stdexcept>
#include <string>

namespace sta {

// Base for every failure raised by the algebra engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element is a zero divisor: a singular matrix representation or a ring
// element with a vanishing (1 +- J)/2 projection.
class ZeroDivisorError : public Error {
 public:
  using Error::Error;
};

// M^2 vanishes, so the unit complex vector M-hat does not exist.
class NullStateError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

// Input outside an operation's domain (odd part where an even element is
// required, non-finite coefficient, inconsistent decomposition, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace sta
