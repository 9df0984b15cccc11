#include "mcs/weil.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace mcs {

void FactoredPoly::validate(const PrimeModulus& m) const {
    std::set<std::uint64_t> seen;
    for (const Factor& f : factors) {
        if (f.mult < 1)
            throw std::invalid_argument("FactoredPoly: multiplicities must be >= 1");
        if (!seen.insert(m.reduce(f.root)).second)
            throw std::invalid_argument("FactoredPoly: roots must be distinct mod p");
    }
}

cd poly_char_sum(const DirichletCharacter& chi, const FactoredPoly& P, Exec exec) {
    const PrimeModulus& m = chi.modulus();
    P.validate(m);
    const std::int64_t p = static_cast<std::int64_t>(m.p());
    const std::int64_t pm1 = p - 1;

    // chi(P(k)) = e(c * E(k) / (p-1)) with E(k) = sum_i mult_i * dlog(k - root_i);
    // exact integer exponents bucketed, one trig pass at the end.
    std::vector<std::int64_t> counts(static_cast<std::size_t>(pm1), 0);
#pragma omp parallel if (exec == Exec::parallel && p > 4096)
    {
        std::vector<std::int64_t> local(static_cast<std::size_t>(pm1), 0);
#pragma omp for schedule(static) nowait
        for (std::int64_t k = 0; k < p; ++k) {
            std::int64_t e = 0;
            bool zero = false;
            for (const auto& f : P.factors) {
                const std::uint64_t r = m.reduce(k - f.root);
                if (r == 0) {
                    zero = true;
                    break;
                }
                e = (e + f.mult % pm1 * static_cast<std::int64_t>(m.dlog(r))) % pm1;
            }
            if (!zero) ++local[static_cast<std::size_t>(e)];
        }
#pragma omp critical
        for (std::int64_t i = 0; i < pm1; ++i) counts[static_cast<std::size_t>(i)] += local[static_cast<std::size_t>(i)];
    }

    const std::int64_t c = static_cast<std::int64_t>(chi.index());
    KahanComplexSum acc;
    for (std::int64_t e = 0; e < pm1; ++e) {
        const std::int64_t cnt = counts[static_cast<std::size_t>(e)];
        if (cnt == 0) continue;
        const std::int64_t ce = static_cast<std::int64_t>(
            (unsigned __int128)c * static_cast<std::uint64_t>(e) % static_cast<std::uint64_t>(pm1));
        acc.add(static_cast<double>(cnt) *
                unit(static_cast<double>(ce) / static_cast<double>(pm1)));
    }
    return acc.value();
}

bool is_dth_power(const FactoredPoly& P, std::int64_t d) {
    if (d < 1) throw std::invalid_argument("is_dth_power: d must be >= 1");
    for (const auto& f : P.factors)
        if (f.mult % d != 0) return false;
    return true;
}

WeilCheck weil_check(const DirichletCharacter& chi, const FactoredPoly& P) {
    if (chi.is_principal())
        throw std::invalid_argument("weil_check: principal character rejected");
    if (is_dth_power(P, static_cast<std::int64_t>(chi.order())))
        throw std::invalid_argument(
            "weil_check: P is a d-th power, the bound's hypothesis fails");
    WeilCheck out;
    out.lhs = std::abs(poly_char_sum(chi, P));
    out.rhs = (static_cast<double>(P.distinct_roots()) - 1.0) *
              std::sqrt(static_cast<double>(chi.p()));
    out.holds = out.lhs <= out.rhs + 1e-6;
    return out;
}

}  // namespace mcs
