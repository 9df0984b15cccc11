#include <doctest.h>

#include <cmath>
#include <memory>

#include "mcs/weil.hpp"

using namespace mcs;

namespace {

std::shared_ptr<const PrimeModulus> mod(std::uint64_t p) {
    return std::make_shared<const PrimeModulus>(p);
}

// brute-force oracle evaluating P(k) by repeated multiplication
cd brute_sum(const DirichletCharacter& chi, const FactoredPoly& P) {
    const std::int64_t p = static_cast<std::int64_t>(chi.p());
    cd acc{};
    for (std::int64_t k = 0; k < p; ++k) {
        std::int64_t v = 1;
        for (const auto& f : P.factors)
            for (std::int64_t j = 0; j < f.mult; ++j)
                v = v * static_cast<std::int64_t>(chi.modulus().reduce(k - f.root)) % p;
        acc += chi.eval(v);
    }
    return acc;
}

}  // namespace

TEST_CASE("polynomial character sums") {
    auto m7 = mod(7);
    auto leg = legendre_character(m7);

    // P(x) = x, non-principal: orthogonality
    FactoredPoly x{{{0, 1}}};
    CHECK(std::abs(poly_char_sum(leg, x)) < 1e-12);

    // P(x) = x(x+1), Legendre mod 7: classical value -1
    FactoredPoly xx1{{{0, 1}, {-1, 1}}};
    CHECK(std::abs(poly_char_sum(leg, xx1) - cd{-1.0, 0.0}) < 1e-12);
    CHECK(std::abs(poly_char_sum(leg, xx1) - brute_sum(leg, xx1)) < 1e-12);

    // P(x) = x^2: chi(x^2) = 1 on units
    FactoredPoly xsq{{{0, 2}}};
    CHECK(std::abs(poly_char_sum(leg, xsq) - cd{6.0, 0.0}) < 1e-12);

    // duplicate roots rejected
    FactoredPoly dup{{{1, 1}, {8, 1}}};  // 8 = 1 mod 7
    CHECK_THROWS_AS(poly_char_sum(leg, dup), std::invalid_argument);
}

TEST_CASE("d-th power detection") {
    CHECK(is_dth_power(FactoredPoly{{{1, 2}}}, 2));
    CHECK(!is_dth_power(FactoredPoly{{{1, 1}, {2, 1}}}, 2));
    CHECK(is_dth_power(FactoredPoly{{}}, 5));  // constant 1
    for (std::int64_t d = 2; d <= 6; ++d) {
        // x (x-1)^(d-1) Q(x)^d shape: never a d-th power
        FactoredPoly P{{{0, 1}, {1, d - 1}, {2, d}}};
        CHECK(!is_dth_power(P, d));
    }
    CHECK_THROWS_AS(is_dth_power(FactoredPoly{{{0, 1}}}, 0), std::invalid_argument);
}

TEST_CASE("weil_check gate and bound") {
    auto m7 = mod(7);
    auto leg = legendre_character(m7);
    FactoredPoly xx1{{{0, 1}, {-1, 1}}};
    const WeilCheck w = weil_check(leg, xx1);
    CHECK(w.lhs == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(w.rhs == doctest::Approx(std::sqrt(7.0)).epsilon(1e-12));
    CHECK(w.holds);

    FactoredPoly xsq{{{0, 2}}};
    CHECK_THROWS_AS(weil_check(leg, xsq), std::invalid_argument);
}

TEST_CASE("single-root non-d-th-power sums vanish") {
    // |sum chi((x-r)^j)| with j not divisible by d is 0 by substitution
    for (std::uint64_t p : {7ull, 13ull, 31ull}) {
        auto m = mod(p);
        for (const auto& chi : enumerate_characters(m, true)) {
            const std::int64_t d = static_cast<std::int64_t>(chi.order());
            for (std::int64_t j = 1; j < std::min<std::int64_t>(d, 4); ++j) {
                FactoredPoly P{{{3, j}}};
                CHECK(std::abs(poly_char_sum(chi, P)) < 1e-9);
            }
        }
    }
}

TEST_CASE("translation invariance") {
    auto m13 = mod(13);
    DirichletCharacter chi(m13, 4);
    FactoredPoly P{{{0, 1}, {5, 2}}};
    const cd base = poly_char_sum(chi, P);
    for (std::int64_t c = 1; c < 13; ++c) {
        FactoredPoly Q{{{(0 - c) % 13, 1}, {(5 - c) % 13, 2}}};
        CHECK(std::abs(poly_char_sum(chi, Q) - base) < 1e-10);
    }
}

TEST_CASE("mini exhaustive Weil suite with brute-force oracle") {
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
        auto m = mod(p);
        const std::int64_t P = static_cast<std::int64_t>(p);
        for (const auto& chi : enumerate_characters(m, true)) {
            const std::int64_t d = static_cast<std::int64_t>(chi.order());
            for (std::int64_t r1 = 0; r1 < P; ++r1)
                for (std::int64_t r2 = r1 + 1; r2 < P; ++r2)
                    for (std::int64_t j1 = 1; j1 < std::min<std::int64_t>(d, 3); ++j1)
                        for (std::int64_t j2 = 1; j2 < std::min<std::int64_t>(d, 3); ++j2) {
                            FactoredPoly poly{{{r1, j1}, {r2, j2}}};
                            if (is_dth_power(poly, d)) continue;
                            const WeilCheck w = weil_check(chi, poly);
                            CHECK(w.holds);
                            CHECK(std::abs(poly_char_sum(chi, poly) - brute_sum(chi, poly)) <
                                  1e-9);
                        }
        }
    }
}
