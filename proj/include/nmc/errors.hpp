#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nmc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input data; carries the 1-based line number when known.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_number(line) {}
  std::size_t line_number;
};

// Set is empty or equals the whole vertex set where that is not allowed.
struct DegenerateSetError : Error {
  using Error::Error;
};

// A quality measure has no value for the given input (e.g. m = 0).
struct UndefinedMeasureError : Error {
  using Error::Error;
};

// Clustering was asked to run on a metric configuration that is neither
// certified nor validated.
struct UncertifiedMetricError : Error {
  using Error::Error;
};

}  // namespace nmc
