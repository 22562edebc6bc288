//! \file errors.hpp
//! \brief Error types thrown by the solver and kernel layers.

#ifndef LOPWENO_ERRORS_HPP_
#define LOPWENO_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace lopweno {

// Scheme ZETA81 requested without an eta/tau81 provider.
struct MissingProviderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// NaN/Inf appeared in an evolved field; carries the first offending location.
struct NonFiniteStateError : std::runtime_error {
  NonFiniteStateError(const std::string& what, long index, double time = 0.0)
      : std::runtime_error(what), index(index), time(time) {}
  long index;
  double time;
};

struct ZeroWaveSpeedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroBaselineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NegativeDensityError : std::runtime_error {
  NegativeDensityError(const std::string& what, long cell)
      : std::runtime_error(what), cell(cell) {}
  long cell;
};

struct NegativePressureError : std::runtime_error {
  NegativePressureError(const std::string& what, long cell)
      : std::runtime_error(what), cell(cell) {}
  long cell;
};

struct NegativeSoundSpeedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VacuumFormationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfDomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lopweno

#endif  // LOPWENO_ERRORS_HPP_
