#pragma once

#include <stdexcept>
#include <string>

namespace iofpar {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Operands built over different ambient sets.
class DimensionError : public Error {
public:
  using Error::Error;
};

// A point, letter index or parameter outside its admissible range.
class RangeError : public Error {
public:
  using Error::Error;
};

// Input outside the domain of a partial operation (e.g. the empty map
// passed to canonical_word).
class DomainError : public Error {
public:
  using Error::Error;
};

// A word or block sequence that does not have the required shape.
class StructureError : public Error {
public:
  using Error::Error;
};

// A rewrite step whose left-hand side does not occur at the given position,
// or which is not an instance of the active relation set.
class ApplicationError : public Error {
public:
  using Error::Error;
};

// Requested size exceeds the configured bound.
class ResourceError : public Error {
public:
  using Error::Error;
};

} // namespace iofpar
