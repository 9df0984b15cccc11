#include "mcs/maxsearch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mcs {

namespace {

constexpr std::size_t scan_block = 8192;

// Deterministic chunked max-|v| scan; ties broken by smallest index.
std::pair<double, std::size_t> max_abs(const std::vector<cd>& v, Exec exec) {
    const std::size_t n = v.size();
    const std::size_t nblocks = (n + scan_block - 1) / scan_block;
    std::vector<double> bmax(nblocks, -1.0);
    std::vector<std::size_t> barg(nblocks, 0);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel && nblocks > 1)
    for (std::size_t b = 0; b < nblocks; ++b) {
        double best = -1.0;
        std::size_t arg = 0;
        const std::size_t lo = b * scan_block;
        const std::size_t hi = std::min(n, lo + scan_block);
        for (std::size_t j = lo; j < hi; ++j) {
            const double a = std::abs(v[j]);
            if (a > best) {
                best = a;
                arg = j;
            }
        }
        bmax[b] = best;
        barg[b] = arg;
    }
    double best = -1.0;
    std::size_t arg = 0;
    for (std::size_t b = 0; b < nblocks; ++b) {
        if (bmax[b] > best) {
            best = bmax[b];
            arg = barg[b];
        }
    }
    return {best, arg};
}

// Recenter frequencies to start at zero: |F| is invariant under the
// modulation e(-offset * theta).
CoefficientVector recentered(const CoefficientVector& c) {
    CoefficientVector out;
    out.offset = 0;
    out.coeffs = c.coeffs;
    out.degree_bound = c.degree_bound - c.offset;
    return out;
}

}  // namespace

CertifiedMax certified_max_coeffs(const CoefficientVector& c, double eps, Exec exec) {
    if (!(eps > 0.0) || !(eps < 0.5))
        throw std::invalid_argument("certified_max: eps must lie in (0, 1/2)");
    const CoefficientVector cc = recentered(c);
    const std::int64_t N = std::max<std::int64_t>(cc.degree_bound, 1);
    const std::size_t M = next_pow2(static_cast<std::size_t>(
        std::ceil(M_PI * static_cast<double>(N) / eps)));
    const std::vector<cd> v = grid_values(cc, 0.0, M, GridKernel::pow2);
    const auto [lo, arg] = max_abs(v, exec);
    CertifiedMax out;
    out.lo = lo;
    out.hi = lo / (1.0 - M_PI * static_cast<double>(N) / static_cast<double>(M));
    out.argmax = arg;
    out.M = M;
    out.degree = N;
    return out;
}

CertifiedMax certified_max(const SumSpec& s, double eps, Exec exec) {
    return certified_max_coeffs(coefficients(s), eps, exec);
}

std::pair<std::int64_t, double> max_decomposed(const SumSpec& s, double t) {
    if (!(t > 0.0) || !(t < 1.0))
        throw std::invalid_argument("max_decomposed: t must lie in (0, 1)");
    const std::size_t p = static_cast<std::size_t>(s.chi.p());
    const GridEvaluation g = grid_evaluate(s, t, p, GridKernel::chirp);
    const auto [best, arg] = max_abs(g.values, Exec::parallel);
    return {static_cast<std::int64_t>(arg), best};
}

double lq_norm(const SumSpec& s, double q, std::size_t M) {
    if (!(q > 0.0))
        throw std::invalid_argument("lq_norm: q must be positive");
    const std::int64_t N = s.degree_bound();
    if ((M & (M - 1)) != 0 || static_cast<std::int64_t>(M) <= 2 * N)
        throw std::invalid_argument("lq_norm: M must be a power of two > 2N");
    const GridEvaluation g = grid_evaluate(s, 0.0, M, GridKernel::pow2);
    KahanSum acc;
    for (const cd& v : g.values) acc.add(std::pow(std::abs(v), q));
    return std::pow(acc.value() / static_cast<double>(M), 1.0 / q);
}

double mahler_measure(const SumSpec& s, std::size_t M) {
    const std::int64_t N = s.degree_bound();
    if ((M & (M - 1)) != 0 || static_cast<std::int64_t>(M) <= 2 * N)
        throw std::invalid_argument("mahler_measure: M must be a power of two > 2N");
    const GridEvaluation g = grid_evaluate(s, 0.0, M, GridKernel::pow2);
    KahanSum acc;
    std::size_t excluded = 0;
    for (const cd& v : g.values) {
        const double a = std::abs(v);
        if (a < 1e-300) {
            ++excluded;
            continue;
        }
        acc.add(std::log(a));
    }
    if (100 * excluded > M)
        throw std::runtime_error(
            "mahler_measure: more than 1% of grid points near zero, quadrature untrustworthy");
    return std::exp(acc.value() / static_cast<double>(M));
}

}  // namespace mcs
