#pragma once

#include <stdexcept>
#include <string>

namespace graphstab {

/// Base for every precondition or domain violation raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input (JSON files, Pauli text). Messages name the
/// offending line or field.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace graphstab
