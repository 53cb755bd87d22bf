#pragma once

#include <cmath>
#include <complex>

namespace conevol::num {

/// Principal square root: Re >= 0.
inline std::complex<double> principal_sqrt(std::complex<double> z) { return std::sqrt(z); }

/// Principal inverse hyperbolic cosine: maps onto the half-strip Re >= 0,
/// Im in [-pi, pi].
inline std::complex<double> principal_acosh(std::complex<double> z) { return std::acosh(z); }

inline double magnitude(std::complex<double> z) { return std::abs(z); }

inline bool is_finite(std::complex<double> z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace conevol::num
