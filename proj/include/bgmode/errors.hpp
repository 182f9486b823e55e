#pragma once

#include <stdexcept>

namespace bgmode {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid raster geometry: bad width/height/channel count, shape mismatch.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Index outside a container's valid range.
class BoundsError : public Error {
 public:
  using Error::Error;
};

// Malformed encoded data (bad magic, bad header, truncated body).
class FormatError : public Error {
 public:
  using Error::Error;
};

// An operation that needs input received none.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

// Invalid run configuration (level, threshold, repeat counts, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Numeric argument outside its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input list length does not match the declared arity.
class ArityError : public Error {
 public:
  using Error::Error;
};

// The majority assumption (modal fraction > 1/2) does not hold.
class AssumptionError : public Error {
 public:
  using Error::Error;
};

// Filesystem failure (missing file, unreadable directory, failed write).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace bgmode
