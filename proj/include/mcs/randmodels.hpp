#pragma once

#include <cstdint>
#include <vector>

#include "mcs/common.hpp"

namespace mcs {

enum class RmfKind { rademacher, steinhaus };

// Completely multiplicative random f with |f(n)| = 1, determined by its
// values at primes; values[n-1] holds f(n) for n = 1..N.
struct RandomMultiplicativeFn {
    RmfKind kind = RmfKind::rademacher;
    std::int64_t N = 0;
    std::vector<cd> values;
};

// Counter-based generator keyed by (seed, trial, index): reproducible
// regardless of scheduling.
std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t trial, std::uint64_t index);

RandomMultiplicativeFn sample_rmf(RmfKind kind, std::int64_t N, std::uint64_t seed,
                                  std::uint64_t trial = 0);

enum class RandomPolyKind { rademacher_iid, rmf_rademacher, rmf_steinhaus };

struct MaxStats {
    double min = 0.0;
    double median = 0.0;
    double max = 0.0;
    std::vector<double> per_trial;  // in trial order
};

// Per-trial certified grid max of |sum_{n<=N} c_n e(n theta)|, normalized
// by sqrt(N log N).
MaxStats random_poly_max(RandomPolyKind kind, std::int64_t N, int trials,
                         std::uint64_t seed, double eps = 1.0 / 16);

}  // namespace mcs
