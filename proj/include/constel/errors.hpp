#ifndef CONSTEL_ERRORS_HPP
#define CONSTEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace constel {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (cycle notation, file formats, braid words).
struct ParseError : Error {
  using Error::Error;
};

/// A search or enumeration exceeded its configured cap.
struct CapExceeded : Error {
  using Error::Error;
};

} // namespace constel

#endif
