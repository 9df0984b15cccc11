#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <memory>

#include "mcs/sums.hpp"

using namespace mcs;

namespace {

std::shared_ptr<const PrimeModulus> mod(std::uint64_t p) {
    return std::make_shared<const PrimeModulus>(p);
}

// definition-level oracle, independent of the library accumulation path
cd direct_oracle(const DirichletCharacter& chi, double alpha, double beta, double theta) {
    const double p = static_cast<double>(chi.p());
    cd acc{};
    for (std::int64_t n = 1; n <= static_cast<std::int64_t>(beta * p + 1.5); ++n) {
        if (static_cast<double>(n) <= alpha * p || static_cast<double>(n) > beta * p) continue;
        acc += chi.eval(n) * unit(static_cast<double>(n) * theta);
    }
    return acc;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

}  // namespace

TEST_CASE("SumSpec validation and coefficient window") {
    auto m5 = mod(5);
    auto leg = legendre_character(m5);
    CHECK_THROWS_AS(SumSpec(leg, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(SumSpec(leg, -0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(SumSpec(leg, 0.01, 0.05), std::invalid_argument);  // empty range

    SumSpec s(leg, 0.0, 1.0);
    auto c = coefficients(s);
    CHECK(c.offset == 1);
    CHECK(c.coeffs.size() == 5);  // n = 1..5, chi(5) = 0
    CHECK(std::abs(c.coeffs[4]) == 0.0);
    CHECK(c.degree_bound == 5);

    SumSpec shifted(leg, 1.0, 2.0);
    CHECK(coefficients(shifted).offset == 6);
    CHECK(coefficients(shifted).coeffs.size() == 5);
}

TEST_CASE("direct sum values") {
    auto m5 = mod(5);
    auto leg = legendre_character(m5);
    SumSpec s(leg, 0.0, 1.0);

    CHECK(std::abs(direct_sum(s, 0.0)) <= 1e-9 * 5);
    // Fekete at theta = 1/5 equals chibar(1) tau(chi) = sqrt(5)
    CHECK(std::abs(direct_sum(s, 0.2) - cd{std::sqrt(5.0), 0.0}) < 1e-12);

    CHECK_THROWS_AS(direct_sum(SumSpec(DirichletCharacter(m5, 0), 0.0, 1.0), 0.1),
                    std::invalid_argument);

    // complete sum at theta = k/p equals chibar(k) tau(chi), all k coprime to p
    for (std::uint64_t p : {7ull, 31ull, 101ull}) {
        auto m = mod(p);
        for (std::uint64_t c : {std::uint64_t{1}, std::uint64_t{2}, (p - 1) / 2}) {
            DirichletCharacter chi(m, c);
            SumSpec sp(chi, 0.0, 1.0);
            const cd tau = gauss_sum(chi);
            const auto chibar = chi.conj_char();
            for (std::uint64_t k = 1; k < p; ++k) {
                const cd lhs = direct_sum(sp, static_cast<double>(k) / static_cast<double>(p));
                CHECK(std::abs(lhs - chibar.eval(static_cast<std::int64_t>(k)) * tau) <
                      1e-9 * static_cast<double>(p));
            }
        }
    }
}

TEST_CASE("serial and parallel direct sums are bitwise identical") {
    auto m = mod(4999);
    SumSpec s(legendre_character(m), 0.0, 1.0);
    for (double theta : {0.123, 0.789}) {
        const cd a = direct_sum(s, theta, Exec::serial);
        const cd b = direct_sum(s, theta, Exec::parallel);
        CHECK(a.real() == b.real());
        CHECK(a.imag() == b.imag());
    }
}

TEST_CASE("grid evaluation agrees with the direct sum") {
    auto m11 = mod(11);
    DirichletCharacter chi(m11, 3);
    SumSpec s(chi, 0.0, 1.0);
    const double t = 0.3;
    const GridEvaluation g = grid_evaluate(s, t, 64);
    const double tol = 1e-9 * std::sqrt(11.0);
    for (std::size_t j = 0; j < 64; ++j) {
        const double theta = t / 11.0 + static_cast<double>(j) / 64.0;
        CHECK(std::abs(g.values[j] - direct_oracle(chi, 0.0, 1.0, theta)) < tol);
    }

    // chirp kernel, non-power-of-two M
    const GridEvaluation gc = grid_evaluate(s, t, 57, GridKernel::chirp);
    for (std::size_t j = 0; j < 57; ++j) {
        const double theta = t / 11.0 + static_cast<double>(j) / 57.0;
        CHECK(std::abs(gc.values[j] - direct_oracle(chi, 0.0, 1.0, theta)) < tol);
    }

    CHECK_THROWS_AS(grid_evaluate(s, t, 57), std::invalid_argument);
    CHECK_THROWS_AS(grid_evaluate(s, 1.5, 64), std::invalid_argument);
}

TEST_CASE("degenerate coefficient grids") {
    CoefficientVector empty;
    empty.offset = 0;
    empty.degree_bound = 0;
    auto g = grid_values(empty, 0.0, 16);
    for (const cd& v : g) CHECK(std::abs(v) == 0.0);

    CoefficientVector single;
    single.offset = 3;
    single.coeffs = {cd{1.0, 0.0}};
    single.degree_bound = 3;
    for (const cd& v : grid_values(single, 0.0, 16))
        CHECK(std::abs(v) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Parseval on the evaluation grid") {
    for (std::uint64_t p : {13ull, 101ull, 499ull}) {
        auto m = mod(p);
        DirichletCharacter chi(m, 2);
        SumSpec s(chi, 0.0, 1.0);
        const std::size_t M = next_pow2(2 * static_cast<std::size_t>(s.degree_bound()) + 1);
        const GridEvaluation g = grid_evaluate(s, 0.0, M);
        KahanSum acc;
        for (const cd& v : g.values) acc.add(std::norm(v));
        const double lhs = acc.value() / static_cast<double>(M);
        const double rhs = static_cast<double>(p - 1);  // unimodular coefficients on units
        CHECK(std::abs(lhs - rhs) <= 1e-7 * rhs);
    }
}

TEST_CASE("conjugation symmetry of F") {
    auto m = mod(101);
    DirichletCharacter chi(m, 7);
    SumSpec s(chi, 0.25, 1.0);
    SumSpec sbar(chi.conj_char(), 0.25, 1.0);
    const double tol = 1e-9 * std::sqrt(101.0);
    for (double theta : {0.07, 0.33, 0.91}) {
        CHECK(std::abs(direct_sum(sbar, -theta) - std::conj(direct_sum(s, theta))) < tol);
    }
}

TEST_CASE("truncated approximation") {
    auto m101 = mod(101);
    auto leg = legendre_character(m101);
    SumSpec s(leg, 0.0, 1.0);

    CHECK_THROWS_AS(truncated_approx(s, 10, 0.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(truncated_approx(s, 10, 0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(truncated_approx(s, 10, 0.5, 51), std::invalid_argument);

    // l = k term contributes zero (chibar(0) = 0): value stays finite
    const cd v0 = truncated_approx(s, 0, 0.5, 3);
    CHECK(std::isfinite(std::abs(v0)));

    // near-complete truncation: residual <= C log p with C <= 10
    const std::int64_t K = 50;  // (p-1)/2
    const double theta = (10.0 + 0.5) / 101.0;
    const cd f = direct_sum(s, theta);
    const cd ft = truncated_approx(s, 10, 0.5, K);
    CHECK(std::abs(f - ft) <= 10.0 * std::log(101.0));
}

TEST_CASE("residual profile and its K-decay") {
    auto m = mod(499);
    auto leg = legendre_character(m);
    SumSpec s(leg, 0.0, 1.0);
    const double t = 0.25;

    auto r8 = residual_profile(s, t, 8);
    REQUIRE(r8.size() == 499);

    // spot-check against the scalar operations
    for (std::int64_t k : {0, 17, 250, 498}) {
        const double theta = (static_cast<double>(k) + t) / 499.0;
        const double expect = std::abs(direct_sum(s, theta) - truncated_approx(s, k, t, 8));
        CHECK(r8[static_cast<std::size_t>(k)] == doctest::Approx(expect).epsilon(1e-6));
    }

    // median residual non-increasing along a K doubling ladder
    double prev = median(residual_profile(s, t, 4));
    for (std::int64_t K : {16, 64, 249}) {
        const double cur = median(residual_profile(s, t, K));
        CHECK(cur <= prev * (1.0 + 1e-9));
        prev = cur;
    }

    // serial/parallel bitwise agreement
    auto rs = residual_profile(s, t, 8, Exec::serial);
    for (std::size_t k = 0; k < rs.size(); ++k) CHECK(rs[k] == r8[k]);
}
