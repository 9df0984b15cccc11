#pragma once

#include <cstdint>
#include <utility>

#include "mcs/sums.hpp"

namespace mcs {

// Bracket [lo, hi] around sup_theta |F|, from an M-point grid scan plus the
// Bernstein derivative bound: hi = lo / (1 - pi N / M), valid for M > pi N.
struct CertifiedMax {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t argmax = 0;
    std::size_t M = 0;
    std::int64_t degree = 0;  // effective degree after recentering
};

CertifiedMax certified_max_coeffs(const CoefficientVector& c, double eps = 1.0 / 16,
                                  Exec exec = Exec::parallel);

CertifiedMax certified_max(const SumSpec& s, double eps = 1.0 / 16,
                           Exec exec = Exec::parallel);

// max over the p-point subgrid theta = (k+t)/p; a lower bound for the
// global maximum.
std::pair<std::int64_t, double> max_decomposed(const SumSpec& s, double t);

// ((1/M) sum_j |v_j|^q)^(1/q) over theta in [0,1); M power of two, M > 2N.
double lq_norm(const SumSpec& s, double q, std::size_t M);

// exp((1/M) sum_j log |v_j|); grid points with |v_j| < 1e-300 are excluded
// and more than 1% exclusions is an error.
double mahler_measure(const SumSpec& s, std::size_t M);

}  // namespace mcs
