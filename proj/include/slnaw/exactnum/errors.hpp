#pragma once

#include <stdexcept>
#include <string>

namespace slnaw {

/// Operands declared over incompatible alphabets, or an invalid combination of
/// construction parameters.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation is well-formed but outside what this library implements.
class UnsupportedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An index (matrix row, leg, basis label) lies outside its declared range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed textual input (polynomial strings, table documents, words).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace slnaw
