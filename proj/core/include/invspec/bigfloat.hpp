#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace invspec {

// Arbitrary-precision real with runtime-selectable precision (MPFR-backed).
using BigFloat = boost::multiprecision::mpfr_float;

inline unsigned digits10_for_bits(int bits) {
  return static_cast<unsigned>(bits * 0.30103) + 2;
}

// Scoped default-precision override for BigFloat temporaries.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(int bits) : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits10_for_bits(bits));
  }
  ~PrecisionGuard() { BigFloat::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

}  // namespace invspec
