#pragma once

#include <stdexcept>
#include <string>

namespace fspp {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A dynamics invariant failed (e.g. stabilization exceeded the n*m bound).
// Reaching this means a bug in the library itself, not bad input.
struct InternalBoundViolation : Error {
    using Error::Error;
};

// Questioned cell (or other coordinate) outside the grid rectangle.
struct OutOfBounds : Error {
    using Error::Error;
};

// Sequential schedule fires a cell that does not hold >= 4 grains.
struct InvalidSchedule : Error {
    using Error::Error;
};

// Operation requires a simple configuration (all values in 0..4, no Frozen).
struct NotSimple : Error {
    using Error::Error;
};

// Instance values fall outside the alphabet a decider/reduction accepts.
struct WrongAlphabet : Error {
    using Error::Error;
};

// Composed reductions whose alphabets do not line up.
struct ChainMismatch : Error {
    using Error::Error;
};

// Truth-table decider refused: more value-2 cells than the assignment cap.
struct TooManyTwos : Error {
    using Error::Error;
};

// Grid text that does not follow the format.
struct ParseError : Error {
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};

// Verification subject name not in the registry.
struct UnknownSubject : Error {
    using Error::Error;
};

}  // namespace fspp
