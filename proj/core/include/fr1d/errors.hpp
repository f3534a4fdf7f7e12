#pragma once

#include <stdexcept>
#include <string>

namespace fr1d {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejected configuration or malformed input (bad degree, bad pairing,
// duplicate nodes, empty interval, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Input data that cannot be represented, e.g. an initial condition that
// evaluates to NaN.
class DataError : public Error {
 public:
  using Error::Error;
};

// A numerical procedure failed: singular predictor system, diverging fixed
// point iteration, Newton non-convergence.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// The discrete solution became non-finite during time stepping.
class BlowUpError : public NumericalError {
 public:
  BlowUpError(const std::string& what, double last_stable_time)
      : NumericalError(what), last_stable_time_(last_stable_time) {}

  double last_stable_time() const noexcept { return last_stable_time_; }

 private:
  double last_stable_time_;
};

}  // namespace fr1d
