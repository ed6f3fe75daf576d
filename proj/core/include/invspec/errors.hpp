#pragma once

#include <stdexcept>
#include <string>

namespace invspec {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// input validation
struct NonNegativeEnergy : Error { using Error::Error; };
struct DegenerateSpectrum : Error { using Error::Error; };
struct TooManyStates : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
struct NonPositiveInput : Error { using Error::Error; };
struct NonPositiveEnergy : Error { using Error::Error; };
struct EdgeOfGrid : Error { using Error::Error; };

// numerical failures
struct SingularMatrix : Error { using Error::Error; };
struct OverflowError : Error { using Error::Error; };
struct NotEnoughStates : Error { using Error::Error; };
struct NonDecayedTail : Error { using Error::Error; };

}  // namespace invspec
