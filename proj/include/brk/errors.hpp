#pragma once

#include <stdexcept>
#include <string>

namespace brkfq {

// Base of everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built over different prime fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// Monomials, points or polynomials whose number of variables disagree.
class ArityMismatch : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition failed (inverse of zero, k not a multiple of q,
// leading monomial of the zero polynomial, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured enumeration, term-count or matrix-size cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// An internal cross-check disagreed with a proven bound (Schwartz-Zippel
// violation, a witness that fails re-verification, ...). Seeing one is a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Malformed polynomial literal or interchange file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace brkfq
