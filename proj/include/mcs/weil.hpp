#pragma once

#include <cstdint>
#include <vector>

#include "mcs/charcore.hpp"

namespace mcs {

// P(x) = prod_i (x - root_i)^(mult_i) over F_p, roots distinct.
struct FactoredPoly {
    struct Factor {
        std::int64_t root;
        std::int64_t mult;
    };
    std::vector<Factor> factors;

    std::size_t distinct_roots() const { return factors.size(); }
    void validate(const PrimeModulus& m) const;
};

// sum_{k=0}^{p-1} chi(P(k)) by direct evaluation with exact exponent
// arithmetic per k.
cd poly_char_sum(const DirichletCharacter& chi, const FactoredPoly& P,
                 Exec exec = Exec::parallel);

// true iff every multiplicity is divisible by d
bool is_dth_power(const FactoredPoly& P, std::int64_t d);

struct WeilCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

// lhs = |poly_char_sum|, rhs = (m-1) sqrt(p). Rejects d-th power inputs.
WeilCheck weil_check(const DirichletCharacter& chi, const FactoredPoly& P);

}  // namespace mcs
