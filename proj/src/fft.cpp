#include "mcs/fft.hpp"

#include <stdexcept>

namespace mcs {

void fft_pow2(std::vector<cd>& a, int sign) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft_pow2: size must be a nonzero power of two");

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * two_pi / static_cast<double>(len);
        const cd wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cd w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                cd u = a[i + j];
                cd v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

std::vector<cd> dft_chirp(const std::vector<cd>& a, int sign) {
    const std::size_t n = a.size();
    if (n == 0) throw std::invalid_argument("dft_chirp: empty input");
    if ((n & (n - 1)) == 0) {
        std::vector<cd> out = a;
        fft_pow2(out, sign);
        return out;
    }

    // X_k = conj-chirp(k) * sum_n [a_n chirp(n)] chirp(k-n),
    // with chirp(m) = e(sign * m^2 / (2n)).
    const std::size_t m = next_pow2(2 * n - 1);
    std::vector<cd> chirp(n);
    for (std::size_t j = 0; j < n; ++j) {
        // j^2/2 mod n computed on reduced index to keep the angle small
        double q = static_cast<double>(j) * static_cast<double>(j) / 2.0;
        q = std::fmod(q, static_cast<double>(n));
        chirp[j] = unit(sign * q / static_cast<double>(n));
    }
    std::vector<cd> u(m, cd{}), v(m, cd{});
    for (std::size_t j = 0; j < n; ++j) u[j] = a[j] * chirp[j];
    for (std::size_t j = 0; j < n; ++j) {
        v[j] = std::conj(chirp[j]);
        if (j != 0) v[m - j] = std::conj(chirp[j]);
    }
    fft_pow2(u, -1);
    fft_pow2(v, -1);
    for (std::size_t j = 0; j < m; ++j) u[j] *= v[j];
    fft_pow2(u, +1);
    const double scale = 1.0 / static_cast<double>(m);
    std::vector<cd> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = u[k] * chirp[k] * scale;
    return out;
}

}  // namespace mcs
