#pragma once

#include <stdexcept>
#include <string>

namespace schutzen {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input document could not be parsed; `line` is 1-based.
struct ParseError : Error {
  ParseError(int line_number, const std::string& what)
      : Error("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  int line;
};

// Knuth-Bendix completion exceeded its rule or word-length limits.
struct LimitExceeded : Error {
  using Error::Error;
};

// Element enumeration found more elements than the configured cap.
struct CapExceeded : Error {
  using Error::Error;
};

// A breadth-first path search hit its node or length cap.
struct SearchExhausted : Error {
  using Error::Error;
};

// The supplied stabilizer word does not satisfy h.e = h.
struct NotPointwiseStabilizer : Error {
  using Error::Error;
};

// A lambda- or star-action evaluated to 0 where a nonzero value is required.
struct ActionKilled : Error {
  using Error::Error;
};

// An edge-map precondition failed; `clause` is 1, 2 or 3.
struct PreconditionViolated : Error {
  PreconditionViolated(int failing_clause, const std::string& what)
      : Error("precondition (" + std::to_string(failing_clause) + "): " + what),
        clause(failing_clause) {}
  int clause;
};

// The enumerated presentation is not a group (a construction bug upstream).
struct NotAGroup : Error {
  using Error::Error;
};

// Isomorphism testing refuses groups beyond its order bound.
struct OrderTooLarge : Error {
  using Error::Error;
};

// A condition the construction guarantees was found violated.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace schutzen
