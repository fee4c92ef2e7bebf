#pragma once

#include <cmath>

namespace prodeq {

// high-precision literals (>= 30 significant digits)
inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

// N1(B) = (12/pi^2) B^2 log B + c1 B^2 + O(B^{547/416+eps}).
// c1 magnitude is the classical 0.511317447; the sign that actually fits the
// exact counts is negative ((N1(B) - (12/pi^2) B^2 log B)/B^2 -> -0.51113 at
// B = 10^6), so that is what we use.
inline constexpr double kN1Leading = 12.0 / (kPi * kPi);
inline constexpr double kN1Secondary = -0.511317447;
inline constexpr double kN1ErrExponent = 547.0 / 416.0;

// multiplication-table density exponent, 1 - (1 + log log 2)/log 2
inline double ford_delta() {
    return 1.0 - (1.0 + std::log(std::log(2.0))) / std::log(2.0);
}

struct AsymptoticConstants {
    double leading = kN1Leading;
    double secondary = kN1Secondary;   // |secondary| = 0.511317447
    double err_exp = kN1ErrExponent;
    double gamma0 = kEulerGamma;
    double delta_ford = ford_delta();
};

}  // namespace prodeq
