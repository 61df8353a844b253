#pragma once

#include <stdexcept>
#include <string>

namespace plate {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point lies outside the domain of a surface, grid or formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The mid-surface map is not an immersion at the evaluation point (rank ∇y < 2).
class DegenerateImmersionError : public Error {
 public:
  using Error::Error;
};

/// The deformation gradient of the plate is singular.
class DegenerateDeformationError : public Error {
 public:
  using Error::Error;
};

/// A standing assumption of a formula does not hold (e.g. det C = 1).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A material energy was evaluated outside its admissible set
/// (Gent stiffening limit, nonpositive I3, ...).
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

/// Least-squares fit could not be formed.
class FitError : public Error {
 public:
  using Error::Error;
};

/// A scalar minimizer found no interior minimum on its bracket.
class BracketingError : public Error {
 public:
  using Error::Error;
};

/// An ODE integration was requested with too coarse a step.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Invalid or malformed run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace plate
