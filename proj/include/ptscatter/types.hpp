#pragma once

#include <complex>
#include <stdexcept>

namespace ptscatter {

using cdouble = std::complex<double>;

/// Incidence direction of the incoming plane wave.
enum class Side { Left, Right };

/// Relative guard thresholds for the two singular regimes of the solver.
struct Tolerances {
  /// Near-singular cutoff for |det T| relative to the continuant scale.
  /// Below it the corner parametrization is abandoned in favour of the
  /// matching solver.
  double singular = 1e-10;
  /// Cutoff for the transmission denominator; below it the energy is a
  /// genuine pole of the amplitudes (spectral singularity).
  double denom = 1e-10;
};

/// Base class of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch final : public Error {
 public:
  using Error::Error;
};

class InvalidStep final : public Error {
 public:
  using Error::Error;
};

class NonFinite final : public Error {
 public:
  using Error::Error;
};

/// Energy outside the open lattice band (0, 4/h^2), or phase outside (0, pi).
class BandViolation final : public Error {
 public:
  using Error::Error;
};

class StepMismatch final : public Error {
 public:
  using Error::Error;
};

/// det T vanished (coordinate singularity of the corner parametrization,
/// not of the physics); callers fall back to the matching solver.
class NearSingular final : public Error {
 public:
  using Error::Error;
};

/// Real-energy pole of the scattering amplitudes of a complex potential.
class SpectralSingularity final : public Error {
 public:
  using Error::Error;
};

class LengthMismatch final : public Error {
 public:
  using Error::Error;
};

class UnsupportedM final : public Error {
 public:
  using Error::Error;
};

class DegreeBoundExceeded final : public Error {
 public:
  using Error::Error;
};

class DeterminantOverflow final : public Error {
 public:
  using Error::Error;
};

}  // namespace ptscatter
