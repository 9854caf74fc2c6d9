#pragma once

#include <complex>

// Convention bookkeeping for the whole library.
//
// All quantities are dimensionless (hbar = 1).
//
// Fourier transform:   fhat(p) = (1/sqrt(2*pi)) Int e^{-i p x} f(x) dx
// Inverse transform:   f(x)   = (1/sqrt(2*pi)) Int e^{+i p x} fhat(p) dp
// 2D transform:        fhat(q,p) = (1/(2*pi)) IntInt e^{-i(qx+py)} f(x,y) dx dy
// Weyl operator:       W(q,p) = e^{i q p / 2} e^{-i q P} e^{i p Q},
//                      (W(q,p) psi)(x) = e^{i q p / 2} e^{i p (x - q)} psi(x - q)
// Fourier conjugation: F^{-1} W(q,p) F = W(-p, q)
//
// Every 2*pi factor in the library traces back to these four lines; the
// convention tests in test_fourier.cpp and test_weyl.cpp pin them down.

namespace phasetomo {

using complex = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;
inline constexpr double sqrt_pi = 1.772453850905516027298167483341145183;
inline constexpr double sqrt_two_pi = 2.506628274631000502415765284811045253;
inline constexpr double inv_sqrt_two_pi = 1.0 / sqrt_two_pi;
inline constexpr double inv_two_pi = 1.0 / two_pi;

inline constexpr complex imag_unit{0.0, 1.0};

} // namespace phasetomo
