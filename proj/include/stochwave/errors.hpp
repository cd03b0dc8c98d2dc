#pragma once

#include <stdexcept>
#include <string>

namespace stochwave {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidGrid : Error {
  using Error::Error;
};
struct SpectralOnNonPeriodic : Error {
  using Error::Error;
};
struct OrderUnsupported : Error {
  using Error::Error;
};
struct IncompatibleField : Error {
  using Error::Error;
};
struct ThresholdOutOfRange : Error {
  using Error::Error;
};
struct ReversedAsymptotes : Error {
  using Error::Error;
};
struct NonpositiveSpeed : Error {
  using Error::Error;
};
struct NonpositiveAmplitude : Error {
  using Error::Error;
};
struct InvalidHorizon : Error {
  using Error::Error;
};
struct OutOfHorizon : Error {
  using Error::Error;
};
struct CandidateModelMismatch : Error {
  using Error::Error;
};
struct MissingParameters : Error {
  using Error::Error;
};
struct InsufficientLevels : Error {
  using Error::Error;
};
struct NoCrossing : Error {
  using Error::Error;
};
struct NoPeak : Error {
  using Error::Error;
};
struct ZeroModulus : Error {
  using Error::Error;
};
struct InvalidConfig : Error {
  using Error::Error;
};

/// Raised when a simulated field stops being finite or its interior
/// sup-norm exceeds the hard cap. Carries the offending time.
struct Blowup : Error {
  double time;
  explicit Blowup(double t, const std::string& what = "")
      : Error("blowup at t=" + std::to_string(t) + (what.empty() ? "" : ": " + what)), time(t) {}
};

}  // namespace stochwave
