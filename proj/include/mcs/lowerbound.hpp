#pragma once

#include <cstdint>

#include "mcs/prescribe.hpp"
#include "mcs/sums.hpp"

namespace mcs {

// Scan t in {0.10, 0.11, ..., 0.90} and return the t maximizing the minimum
// distance of (alpha+beta)t and (beta-alpha)t from (1/2)Z; ties broken by
// smallest t.
double choose_t(double alpha, double beta);

// Phase-align the targets xi_l with the truncation weights: nearest element
// of mu_d for d >= 3 (arg 0 -> xi = 1), sign alignment for d = 2
// (sgn 0 -> +1).
PrescriptionTarget choose_xi(const DirichletCharacter& chi, const SumSpec& s, double t,
                             std::int64_t K0);

struct TildeLower {
    double value = 0.0;     // |F~_{chi,k}|
    double minorant = 0.0;  // (sqrt(p)/2pi) cos(pi/3 + pi/10) sum_l |w_l|
};

// Requires k in S for the given targets; asserts value >= minorant up to
// 1e-9 relative.
TildeLower tilde_lower(const SumSpec& s, double t, const PrescriptionTarget& target,
                       std::int64_t k);

// sum_{1<=l<=K} |sin(pi(u1 l + c1)) sin(pi(u2 l + c2))| / l; c1, c2 must not
// lie in (1/2)Z.
double sumcos(double u1, double u2, double c1, double c2, std::int64_t K);

struct LowerBoundWitness {
    double t = 0.0;
    PrescriptionTarget targets;
    std::int64_t k = 0;
    cd tilde_value;
    double tilde_minorant = 0.0;
    double residual = 0.0;
    double lower_ratio = 0.0;  // |F~| / (sqrt(p) log(K0 + 1))
    double final_ratio = 0.0;  // |F((k+t)/p)| / (sqrt(p) log log p)
};

// End-to-end pipeline: choose_t -> default_K0 -> choose_xi -> build_S ->
// select_k -> tilde_lower, then the direct sum at theta = (k+t)/p.
LowerBoundWitness lower_bound_witness(const SumSpec& s);

}  // namespace mcs
