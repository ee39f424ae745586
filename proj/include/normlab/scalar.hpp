#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "normlab/errors.hpp"

namespace normlab {

// Every domain object carries a field tag; objects from different fields
// never mix in one computation.
enum class ScalarField { Real, Complex };

inline const char* field_name(ScalarField f) {
  return f == ScalarField::Real ? "real" : "complex";
}

// One runtime scalar representation for both fields. Real-field objects
// keep imaginary parts exactly zero, which complex arithmetic preserves.
using Scalar = std::complex<double>;

inline double abs2(const Scalar& z) { return std::norm(z); }

inline bool is_real_value(const Scalar& z) { return z.imag() == 0.0; }

// conj(z)/|z|; maps 0 to 1 so the result always has unit modulus.
inline Scalar conj_phase(const Scalar& z) {
  double m = std::abs(z);
  if (m == 0.0) return Scalar(1.0, 0.0);
  return std::conj(z) / m;
}

inline void check_same_field(ScalarField a, ScalarField b, const std::string& what) {
  require(a == b, ErrorCode::FieldMismatch,
          what + ": cannot mix " + field_name(a) + " and " + field_name(b) + " objects");
}

inline double relative_gap(double lhs, double rhs) {
  // Signed slack of "lhs <= rhs", relative and robust near zero.
  return (lhs - rhs) / std::max(std::abs(rhs), 1e-12);
}

}  // namespace normlab
