#include <doctest.h>

#include <random>

#include "mcs/fft.hpp"

using namespace mcs;

namespace {

// quadratic-time oracle
std::vector<cd> dft_naive(const std::vector<cd>& a, int sign) {
    const std::size_t n = a.size();
    std::vector<cd> out(n, cd{});
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            out[k] += a[j] * unit(sign * static_cast<double>(j * k) / static_cast<double>(n));
    return out;
}

std::vector<cd> random_vector(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cd> a(n);
    for (auto& z : a) z = cd(u(rng), u(rng));
    return a;
}

}  // namespace

TEST_CASE("radix-2 FFT matches the naive DFT") {
    for (std::size_t n : {1u, 2u, 8u, 64u, 256u}) {
        for (int sign : {+1, -1}) {
            auto a = random_vector(n, static_cast<unsigned>(n) * 7 + sign + 13);
            auto expect = dft_naive(a, sign);
            auto got = a;
            fft_pow2(got, sign);
            for (std::size_t k = 0; k < n; ++k)
                CHECK(std::abs(got[k] - expect[k]) < 1e-9 * static_cast<double>(n + 1));
        }
    }
    std::vector<cd> bad(3);
    CHECK_THROWS_AS(fft_pow2(bad, +1), std::invalid_argument);
}

TEST_CASE("chirp transform matches the naive DFT at awkward lengths") {
    for (std::size_t n : {3u, 12u, 17u, 101u, 257u}) {
        for (int sign : {+1, -1}) {
            auto a = random_vector(n, static_cast<unsigned>(n) * 31 + sign + 5);
            auto expect = dft_naive(a, sign);
            auto got = dft_chirp(a, sign);
            REQUIRE(got.size() == n);
            for (std::size_t k = 0; k < n; ++k)
                CHECK(std::abs(got[k] - expect[k]) < 1e-8 * static_cast<double>(n + 1));
        }
    }
}

TEST_CASE("fft round trip") {
    auto a = random_vector(128, 99);
    auto b = a;
    fft_pow2(b, +1);
    fft_pow2(b, -1);
    for (std::size_t k = 0; k < a.size(); ++k)
        CHECK(std::abs(b[k] / 128.0 - a[k]) < 1e-12);
}
