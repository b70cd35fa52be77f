#pragma once

#include <stdexcept>
#include <string>

namespace spectral {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input files, unknown labels and invalid parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration values (damping outside [0,1), tolerance <= 0, ...).
class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

/// A ranking method refused the data: divergent series, singular systems,
/// structural preconditions such as negative weights or zero out-strength.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace spectral
