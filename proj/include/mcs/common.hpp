#pragma once

#include <complex>
#include <cstdint>
#include <cmath>
#include <vector>

namespace mcs {

using cd = std::complex<double>;

inline constexpr double two_pi = 6.283185307179586476925286766559;

// e(x) = exp(2*pi*i*x)
inline cd unit(double x) {
    return {std::cos(two_pi * x), std::sin(two_pi * x)};
}

inline std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

// Which kernel implementation to run. Serial is the reference path kept
// for testing; parallel must produce bitwise-identical results.
enum class Exec { serial, parallel };

// Neumaier compensated accumulator.
struct KahanSum {
    double s = 0.0;
    double c = 0.0;

    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

struct KahanComplexSum {
    KahanSum re, im;
    void add(cd z) {
        re.add(z.real());
        im.add(z.imag());
    }
    cd value() const { return {re.value(), im.value()}; }
};

// Distance from x to the nearest element of (1/2)Z.
inline double dist_to_half_integers(double x) {
    double y = x * 2.0;
    return 0.5 * std::abs(y - std::round(y));
}

}  // namespace mcs
