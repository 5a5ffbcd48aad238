#pragma once

#include <stdexcept>
#include <string>

namespace steinaudit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An integrand returned NaN or infinity at an interior node.
struct NonFiniteEvaluation : Error { using Error::Error; };
// A required integral does not exist / the adaptive kernel cannot resolve it.
struct NonIntegrable : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
// S_q is not contained in (or not equal to, where equality is required) S_p.
struct SupportMismatch : Error { using Error::Error; };
struct OffSupport : Error { using Error::Error; };
struct NotPowerExponential : Error { using Error::Error; };
struct NotCentered : Error { using Error::Error; };
struct UnknownClass : Error { using Error::Error; };
struct InvalidMixing : Error { using Error::Error; };
struct NonFiniteMoments : Error { using Error::Error; };
struct NonFiniteDistance : Error { using Error::Error; };
struct NonConvergence : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace steinaudit
