#ifndef QPART_ERRORS_HPP
#define QPART_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qpart {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonUnitConstantTerm : public Error {
 public:
  using Error::Error;
};

class IndexBeyondOrder : public Error {
 public:
  using Error::Error;
};

/// Exact division by an integer left a remainder.
class NonIntegralQuotient : public Error {
 public:
  using Error::Error;
};

/// A product or sum specialization that is not a formal power series in q
/// (vanishing factor, negative exponent, step below one).
class InvalidSpecialization : public Error {
 public:
  using Error::Error;
};

class NegativeQExponent : public InvalidSpecialization {
 public:
  using InvalidSpecialization::InvalidSpecialization;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class UnknownIdentity : public Error {
 public:
  using Error::Error;
};

class NonTerminatingSum : public Error {
 public:
  using Error::Error;
};

class IntegerOverflow : public Error {
 public:
  using Error::Error;
};

class EnumerationBoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace qpart

#endif  // QPART_ERRORS_HPP
