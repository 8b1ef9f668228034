#pragma once

#include <stdexcept>
#include <string>

namespace bkx {

// Base class for everything thrown by this library on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Division by a zero scalar or a zero symbol.
struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

// A symbol whose denominator vanishes identically at U = 0 even after
// factoring out the maximal power of U; such a thing has no Laurent
// expansion around 0.  Valid inputs never produce it.
struct NotExpandable : Error {
  explicit NotExpandable(const std::string& msg) : Error(msg) {}
};

// The min-set in the exponent recursion of the intertwining L-factor is
// empty for the requested (coset, r) pair.
struct EmptyMinSet : Error {
  explicit EmptyMinSet(const std::string& msg) : Error(msg) {}
};

// Matrix fails the symplectic group condition g J g^t = J.
struct NotSymplectic : Error {
  explicit NotSymplectic(const std::string& msg) : Error(msg) {}
};

// Levi block is not invertible.
struct SingularLevi : Error {
  explicit SingularLevi(const std::string& msg) : Error(msg) {}
};

// Precondition violations (bad n, bad place, value out of range, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Two independent evaluation routes disagree beyond tolerance.
struct OracleDisagreement : Error {
  explicit OracleDisagreement(const std::string& msg) : Error(msg) {}
};

// A verification predicate failed.
struct CheckFailed : Error {
  explicit CheckFailed(const std::string& msg) : Error(msg) {}
};

// Malformed expression text.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Structurally invalid interchange file (missing keys, wrong types, ...).
struct SchemaError : Error {
  explicit SchemaError(const std::string& msg) : Error(msg) {}
};

}  // namespace bkx
