#include "mcs/randmodels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mcs/maxsearch.hpp"

namespace mcs {

std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t trial, std::uint64_t index) {
    // splitmix64-style finalizer over a mixed counter
    std::uint64_t z = seed * 0x9e3779b97f4a7c15ull + trial * 0xbf58476d1ce4e5b9ull +
                      index * 0x94d049bb133111ebull + 0x2545f4914f6cdd1dull;
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
}

namespace {

double uniform01(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace

RandomMultiplicativeFn sample_rmf(RmfKind kind, std::int64_t N, std::uint64_t seed,
                                  std::uint64_t trial) {
    if (N < 1) throw std::invalid_argument("sample_rmf: need N >= 1");
    RandomMultiplicativeFn f;
    f.kind = kind;
    f.N = N;
    f.values.assign(static_cast<std::size_t>(N), cd(1.0, 0.0));

    // smallest prime factor sieve; propagate f(n) = f(spf) * f(n/spf)
    std::vector<std::int64_t> spf(static_cast<std::size_t>(N + 1), 0);
    for (std::int64_t n = 2; n <= N; ++n) {
        if (spf[static_cast<std::size_t>(n)] == 0) {
            for (std::int64_t m = n; m <= N; m += n)
                if (spf[static_cast<std::size_t>(m)] == 0)
                    spf[static_cast<std::size_t>(m)] = n;
        }
    }
    for (std::int64_t n = 2; n <= N; ++n) {
        const std::int64_t q = spf[static_cast<std::size_t>(n)];
        if (q == n) {
            const std::uint64_t bits = counter_rng(seed, trial, static_cast<std::uint64_t>(n));
            if (kind == RmfKind::rademacher)
                f.values[static_cast<std::size_t>(n - 1)] = (bits & 1) ? cd(-1.0, 0.0) : cd(1.0, 0.0);
            else
                f.values[static_cast<std::size_t>(n - 1)] = unit(uniform01(bits));
        } else {
            f.values[static_cast<std::size_t>(n - 1)] =
                f.values[static_cast<std::size_t>(q - 1)] *
                f.values[static_cast<std::size_t>(n / q - 1)];
        }
    }
    return f;
}

MaxStats random_poly_max(RandomPolyKind kind, std::int64_t N, int trials,
                         std::uint64_t seed, double eps) {
    if (N < 1 || trials < 1)
        throw std::invalid_argument("random_poly_max: need N >= 1 and trials >= 1");
    const double norm =
        (N > 1) ? std::sqrt(static_cast<double>(N) * std::log(static_cast<double>(N))) : 1.0;

    MaxStats stats;
    stats.per_trial.assign(static_cast<std::size_t>(trials), 0.0);
#pragma omp parallel for schedule(dynamic)
    for (int trial = 0; trial < trials; ++trial) {
        CoefficientVector c;
        c.offset = 1;
        c.degree_bound = N;
        c.coeffs.resize(static_cast<std::size_t>(N));
        if (kind == RandomPolyKind::rademacher_iid) {
            for (std::int64_t n = 1; n <= N; ++n) {
                const std::uint64_t bits =
                    counter_rng(seed, static_cast<std::uint64_t>(trial), static_cast<std::uint64_t>(n));
                c.coeffs[static_cast<std::size_t>(n - 1)] = (bits & 1) ? cd(-1.0, 0.0) : cd(1.0, 0.0);
            }
        } else {
            const RmfKind rk = (kind == RandomPolyKind::rmf_rademacher) ? RmfKind::rademacher
                                                                        : RmfKind::steinhaus;
            c.coeffs = sample_rmf(rk, N, seed, static_cast<std::uint64_t>(trial)).values;
        }
        const CertifiedMax cm = certified_max_coeffs(c, eps, Exec::serial);
        stats.per_trial[static_cast<std::size_t>(trial)] = cm.lo / norm;
    }

    std::vector<double> sorted = stats.per_trial;
    std::sort(sorted.begin(), sorted.end());
    stats.min = sorted.front();
    stats.max = sorted.back();
    stats.median = sorted[sorted.size() / 2];
    return stats;
}

}  // namespace mcs
