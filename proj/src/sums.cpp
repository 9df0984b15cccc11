#include "mcs/sums.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mcs/fft.hpp"

namespace mcs {

namespace {

constexpr std::size_t grid_memory_cap = std::size_t{1} << 26;
constexpr std::int64_t reduction_block = 4096;

// Blocked compensated reduction with a fixed block size, so the result is
// bitwise identical for any thread count.
template <typename Term>
cd blocked_sum(std::int64_t count, Exec exec, Term term) {
    const std::int64_t nblocks = (count + reduction_block - 1) / reduction_block;
    std::vector<cd> partial(static_cast<std::size_t>(std::max<std::int64_t>(nblocks, 0)));
#pragma omp parallel for schedule(static) if (exec == Exec::parallel && nblocks > 1)
    for (std::int64_t b = 0; b < nblocks; ++b) {
        KahanComplexSum acc;
        const std::int64_t lo = b * reduction_block;
        const std::int64_t hi = std::min(count, lo + reduction_block);
        for (std::int64_t i = lo; i < hi; ++i) acc.add(term(i));
        partial[static_cast<std::size_t>(b)] = acc.value();
    }
    KahanComplexSum total;
    for (const cd& z : partial) total.add(z);
    return total.value();
}

}  // namespace

SumSpec::SumSpec(DirichletCharacter c, double a, double b)
    : chi(std::move(c)), alpha(a), beta(b) {
    if (!(a >= 0.0) || !(b > a))
        throw std::invalid_argument("SumSpec: need beta > alpha >= 0");
    if (n_lo() > n_hi())
        throw std::invalid_argument("SumSpec: empty n-range (alpha p, beta p] for p = " +
                                    std::to_string(chi.p()));
}

std::int64_t SumSpec::n_lo() const {
    return static_cast<std::int64_t>(std::floor(alpha * static_cast<double>(chi.p()) + 1e-9)) + 1;
}

std::int64_t SumSpec::n_hi() const {
    return static_cast<std::int64_t>(std::floor(beta * static_cast<double>(chi.p()) + 1e-9));
}

std::int64_t SumSpec::degree_bound() const {
    return static_cast<std::int64_t>(std::ceil(beta * static_cast<double>(chi.p()) - 1e-9));
}

CoefficientVector coefficients(const SumSpec& s) {
    CoefficientVector out;
    out.offset = s.n_lo();
    out.degree_bound = s.degree_bound();
    const std::int64_t count = s.n_hi() - s.n_lo() + 1;
    out.coeffs.resize(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i)
        out.coeffs[static_cast<std::size_t>(i)] = s.chi.eval(out.offset + i);
    return out;
}

cd direct_sum(const SumSpec& s, double theta, Exec exec) {
    if (s.chi.is_principal())
        throw std::invalid_argument("direct_sum: principal character rejected");
    const std::int64_t lo = s.n_lo();
    const std::int64_t count = s.n_hi() - lo + 1;
    const DirichletCharacter& chi = s.chi;
    return blocked_sum(count, exec, [&](std::int64_t i) {
        const std::int64_t n = lo + i;
        return chi.eval(n) * unit(static_cast<double>(n) * theta);
    });
}

std::vector<cd> grid_values(const CoefficientVector& c, double twist, std::size_t M,
                            GridKernel kernel) {
    if (M == 0) throw std::invalid_argument("grid_values: M must be >= 1");
    if (M > grid_memory_cap)
        throw std::runtime_error("grid_values: grid size exceeds memory cap");
    if (kernel == GridKernel::pow2 && (M & (M - 1)) != 0)
        throw std::invalid_argument(
            "grid_values: pow2 kernel requires a power-of-two grid size");

    std::vector<cd> folded(M, cd{});
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
        const std::int64_t n = c.offset + static_cast<std::int64_t>(i);
        const std::size_t m =
            static_cast<std::size_t>(((n % static_cast<std::int64_t>(M)) +
                                      static_cast<std::int64_t>(M)) %
                                     static_cast<std::int64_t>(M));
        folded[m] += c.coeffs[i] * unit(static_cast<double>(n) * twist);
    }
    if (kernel == GridKernel::pow2) {
        fft_pow2(folded, +1);
        return folded;
    }
    return dft_chirp(folded, +1);
}

GridEvaluation grid_evaluate(const SumSpec& s, double t, std::size_t M,
                             GridKernel kernel) {
    if (!(t >= 0.0) || !(t < 1.0))
        throw std::invalid_argument("grid_evaluate: t must lie in [0, 1)");
    const CoefficientVector c = coefficients(s);
    GridEvaluation out;
    out.M = M;
    out.degree_bound = c.degree_bound;
    out.values = grid_values(c, t / static_cast<double>(s.chi.p()), M, kernel);
    return out;
}

cd truncated_approx(const SumSpec& s, std::int64_t k, double t, std::int64_t K) {
    if (s.chi.is_principal())
        throw std::invalid_argument("truncated_approx: principal character rejected");
    if (!(t > 0.0) || !(t < 1.0))
        throw std::invalid_argument("truncated_approx: t must lie in (0, 1)");
    const std::int64_t p = static_cast<std::int64_t>(s.chi.p());
    if (K < 1 || 2 * K >= p)
        throw std::invalid_argument("truncated_approx: need 1 <= K < p/2");

    const DirichletCharacter chibar = s.chi.conj_char();
    KahanComplexSum acc;
    for (std::int64_t l = -K; l <= K; ++l) {
        const double lt = static_cast<double>(l) + t;
        const cd w = (unit(s.beta * lt) - unit(s.alpha * lt)) / lt;
        acc.add(w * chibar.eval(k - l));
    }
    const cd tau = gauss_sum(s.chi);
    return tau * unit(s.alpha * static_cast<double>(k)) * cd(0.0, -1.0) / two_pi *
           acc.value();
}

std::vector<double> residual_profile(const SumSpec& s, double t, std::int64_t K,
                                     Exec exec) {
    if (s.chi.is_principal())
        throw std::invalid_argument("residual_profile: principal character rejected");
    if (!(t > 0.0) || !(t < 1.0))
        throw std::invalid_argument("residual_profile: t must lie in (0, 1)");
    const std::int64_t p = static_cast<std::int64_t>(s.chi.p());
    if (K < 1 || 2 * K >= p)
        throw std::invalid_argument("residual_profile: need 1 <= K < p/2");

    // F side on the exact theta = (k+t)/p grid
    const GridEvaluation grid =
        grid_evaluate(s, t, static_cast<std::size_t>(p), GridKernel::chirp);

    const DirichletCharacter chibar = s.chi.conj_char();
    std::vector<cd> chibar_table(static_cast<std::size_t>(p));
    for (std::int64_t r = 0; r < p; ++r)
        chibar_table[static_cast<std::size_t>(r)] = chibar.eval(r);

    std::vector<cd> weights(static_cast<std::size_t>(2 * K + 1));
    for (std::int64_t l = -K; l <= K; ++l) {
        const double lt = static_cast<double>(l) + t;
        weights[static_cast<std::size_t>(l + K)] =
            (unit(s.beta * lt) - unit(s.alpha * lt)) / lt;
    }
    const cd front = gauss_sum(s.chi) * cd(0.0, -1.0) / two_pi;

    std::vector<double> out(static_cast<std::size_t>(p));
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (std::int64_t k = 0; k < p; ++k) {
        KahanComplexSum acc;
        for (std::int64_t l = -K; l <= K; ++l) {
            std::int64_t r = (k - l) % p;
            if (r < 0) r += p;
            acc.add(weights[static_cast<std::size_t>(l + K)] *
                    chibar_table[static_cast<std::size_t>(r)]);
        }
        const cd tilde =
            front * unit(s.alpha * static_cast<double>(k)) * acc.value();
        out[static_cast<std::size_t>(k)] =
            std::abs(grid.values[static_cast<std::size_t>(k)] - tilde);
    }
    return out;
}

}  // namespace mcs
