#pragma once

#include <cmath>
#include <complex>
#include <string_view>

#include "exactpot/errors.hpp"

namespace exactpot {

using Complex = std::complex<double>;

inline bool is_finite(Complex x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }

inline Complex require_finite(Complex x, std::string_view what) {
  if (!is_finite(x)) throw ValidationError(std::string(what) + " must be finite");
  return x;
}

/// True when x lies on the real axis at a non-positive integer (within `tol`).
inline bool is_nonpositive_integer(Complex x, double tol = 1e-12) {
  if (std::abs(x.imag()) > tol) return false;
  const double re = x.real();
  return re < 0.5 && std::abs(re - std::round(re)) <= tol;
}

}  // namespace exactpot
