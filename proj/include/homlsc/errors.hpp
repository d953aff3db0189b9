#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace homlsc {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A domain type violates one of its invariants (bad wavelength, angle, ...).
class InvalidSpec : public Error {
public:
  using Error::Error;
};

// Configuration file problems; message carries key name and line number.
class ConfigError : public Error {
public:
  using Error::Error;
};

// Integrand returned a non-finite value at a quadrature node.
class QuadratureError : public Error {
public:
  using Error::Error;
};

// Node doubling hit the cap without the estimates settling down.
// Carries both final estimates so callers can judge how bad it was.
class NonConvergenceError : public Error {
public:
  NonConvergenceError(const std::string& msg, std::complex<double> previous,
                      std::complex<double> last, int nodes)
      : Error(msg), previous_estimate(previous), last_estimate(last),
        nodes_per_axis(nodes) {}

  std::complex<double> previous_estimate;
  std::complex<double> last_estimate;
  int nodes_per_axis;
};

// Scan does not bracket the dip (minimum at an endpoint or a missing
// half-depth crossing).
class DipError : public Error {
public:
  using Error::Error;
};

// All counts in a fit data set are identical; nothing to fit.
class FlatDataError : public Error {
public:
  using Error::Error;
};

// Filesystem failures while writing or reading artifacts.
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace homlsc
