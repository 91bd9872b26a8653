#pragma once

#include <stdexcept>
#include <string>

namespace bkl {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : Error {
  using Error::Error;
};

// positive_solve / negative_solve were handed a c with bar(c) != -c.
// This always means the bar matrix upstream is inconsistent.
struct BarAntisymmetryError : Error {
  using Error::Error;
};

struct ExactDivisionError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct TruncationError : Error {
  using Error::Error;
};

struct EmptyIntervalError : Error {
  using Error::Error;
};

struct SequencePatternError : Error {
  using Error::Error;
};

struct GeneratorRangeError : Error {
  using Error::Error;
};

struct BoundaryGeneratorError : Error {
  using Error::Error;
};

struct NotInWedgeSpaceError : Error {
  using Error::Error;
};

struct NotInUSpanError : Error {
  using Error::Error;
};

struct DominanceError : Error {
  using Error::Error;
};

struct StabilizationCapError : Error {
  using Error::Error;
};

}  // namespace bkl
