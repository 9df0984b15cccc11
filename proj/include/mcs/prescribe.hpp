#pragma once

#include <cstdint>
#include <vector>

#include "mcs/charcore.hpp"
#include "mcs/sums.hpp"

namespace mcs {

// Targets xi_l in mu_d for |l| <= K0, stored as exponents b_l with
// xi_l = e(b_l / d). The match window is |a| <= floor(d/20).
struct PrescriptionTarget {
    std::int64_t K0 = 0;
    std::int64_t d = 2;
    std::vector<std::int64_t> xi_exp;  // size 2*K0+1, index l+K0

    std::int64_t window() const { return d / 20; }
    std::int64_t xi(std::int64_t l) const { return xi_exp[static_cast<std::size_t>(l + K0)]; }
    void validate() const;
};

struct PrescriptionSet {
    std::vector<std::int64_t> members;  // sorted
    double predicted_size = 0.0;        // p * ((2 floor(d/20) + 1) / d)^(2K0+1)
};

// floor(log p / (log log p)^2), floored at 1; needs p >= 17
std::int64_t default_K0(std::int64_t p);

double predicted_set_size(std::int64_t p, const PrescriptionTarget& target);

// k in S iff chi(k-l) = xi_l e(a/d) for some |a| <= floor(d/20), for every
// |l| <= K0, with K0 < k < p - K0.
bool in_prescription_set(const DirichletCharacter& chi, const PrescriptionTarget& target,
                         std::int64_t k);

// Exact integer W(k) = prod_l sum_a sum_j (chibar(k-l) xi_l e(a/d))^j,
// computed from its defining product, independent of the membership
// predicate.
std::int64_t weight_W(const DirichletCharacter& chi, const PrescriptionTarget& target,
                      std::int64_t k);

// Exhaustive k-scan. Errors when the predicted size is below 16 or the
// scan comes back empty.
PrescriptionSet build_S(const DirichletCharacter& chi, const PrescriptionTarget& target,
                        Exec exec = Exec::parallel);

struct SumWDiagnostic {
    long long measured = 0;
    double predicted = 0.0;
};

SumWDiagnostic sum_W_diagnostic(const DirichletCharacter& chi,
                                const PrescriptionTarget& target);

struct SelectedK {
    std::int64_t k = 0;
    double residual = 0.0;
};

// The k in S minimizing |F_{chi,k} - F~_{chi,k}| at truncation K0.
SelectedK select_k(const SumSpec& s, const PrescriptionTarget& target, double t);

struct OffdiagDiagnostic {
    double lhs = 0.0;
    double rhs_scale = 0.0;  // K0 sqrt(p) (d log d)^(2K0+1)
};

OffdiagDiagnostic offdiag_diagnostic(const DirichletCharacter& chi,
                                     const PrescriptionTarget& target,
                                     std::int64_t l1, std::int64_t l2);

}  // namespace mcs
