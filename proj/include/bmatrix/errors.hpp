#pragma once

#include <stdexcept>
#include <string>

namespace bmatrix {

// Dimension mismatch or network smaller than two neurons.
class SizingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input violates a structural invariant (asymmetric T, non-triangular B, ...).
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class PermutationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed memory / matrix file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bmatrix
