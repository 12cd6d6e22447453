#pragma once

#include <stdexcept>
#include <string>

namespace ulrich {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad scroll, bad divisor, signed sheaf...).
class InvalidInput : public Error {
  public:
    using Error::Error;
};

/// A dimension was requested exactly but only an interval is known.
class Indeterminate : public Error {
  public:
    using Error::Error;
};

/// A sheaf failed the Ulrich criterion, or its Beilinson table is not diagonal.
class NotUlrich : public Error {
  public:
    using Error::Error;
};

} // namespace ulrich
