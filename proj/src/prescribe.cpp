#include "mcs/prescribe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mcs {

void PrescriptionTarget::validate() const {
    if (K0 < 0) throw std::invalid_argument("PrescriptionTarget: K0 must be >= 0");
    if (d < 2) throw std::invalid_argument("PrescriptionTarget: d must be >= 2");
    if (xi_exp.size() != static_cast<std::size_t>(2 * K0 + 1))
        throw std::invalid_argument("PrescriptionTarget: need 2*K0+1 targets");
    for (std::int64_t b : xi_exp)
        if (b < 0 || b >= d)
            throw std::invalid_argument("PrescriptionTarget: xi exponents must lie in [0, d)");
}

std::int64_t default_K0(std::int64_t p) {
    if (p < 17) throw std::invalid_argument("default_K0: need p >= 17");
    const double lp = std::log(static_cast<double>(p));
    const double llp = std::log(lp);
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(lp / (llp * llp))));
}

double predicted_set_size(std::int64_t p, const PrescriptionTarget& target) {
    const double frac = static_cast<double>(2 * target.window() + 1) /
                        static_cast<double>(target.d);
    return static_cast<double>(p) * std::pow(frac, static_cast<double>(2 * target.K0 + 1));
}

namespace {

// smallest-absolute-value representative of x mod d
std::int64_t abs_rep(std::int64_t x, std::int64_t d) {
    x %= d;
    if (x < 0) x += d;
    if (2 * x > d) x -= d;
    return x;
}

}  // namespace

bool in_prescription_set(const DirichletCharacter& chi, const PrescriptionTarget& target,
                         std::int64_t k) {
    const std::int64_t p = static_cast<std::int64_t>(chi.p());
    // boundary exclusion: k within K0 of 0 or p can never match all targets
    if (k <= target.K0 || k >= p - target.K0) return false;
    for (std::int64_t l = -target.K0; l <= target.K0; ++l) {
        const std::uint64_t r = chi.modulus().reduce(k - l);
        if (r == 0) return false;
        const std::int64_t e = chi.mu_d_exponent(static_cast<std::int64_t>(r));
        const std::int64_t a = abs_rep(e - target.xi(l), target.d);
        if (std::abs(a) > target.window()) return false;
    }
    return true;
}

std::int64_t weight_W(const DirichletCharacter& chi, const PrescriptionTarget& target,
                      std::int64_t k) {
    target.validate();
    const std::int64_t d = target.d;
    const std::int64_t A = target.window();
    std::int64_t w = 1;
    for (std::int64_t l = -target.K0; l <= target.K0; ++l) {
        const std::uint64_t r = chi.modulus().reduce(k - l);
        std::int64_t inner;
        if (r == 0) {
            // chibar(0) = 0: only the j=0 term survives, once per a
            inner = 2 * A + 1;
        } else {
            // geometric sum over j of a d-th root of unity: d when the base
            // is 1, else 0; at most one a can match since 2A < d
            const std::int64_t e = chi.mu_d_exponent(static_cast<std::int64_t>(r));
            const std::int64_t a = abs_rep(e - target.xi(l), d);
            inner = (std::abs(a) <= A) ? d : 0;
        }
        w *= inner;
        if (w == 0) return 0;
    }
    return w;
}

PrescriptionSet build_S(const DirichletCharacter& chi, const PrescriptionTarget& target,
                        Exec exec) {
    target.validate();
    if (chi.is_principal())
        throw std::invalid_argument("build_S: principal character rejected");
    if (static_cast<std::int64_t>(chi.order()) != target.d)
        throw std::invalid_argument("build_S: target order does not match the character");
    const std::int64_t p = static_cast<std::int64_t>(chi.p());
    PrescriptionSet out;
    out.predicted_size = predicted_set_size(p, target);
    if (out.predicted_size < 16.0)
        throw std::runtime_error("build_S: predicted set size " +
                                 std::to_string(out.predicted_size) +
                                 " below 16; p too small for this (d, K0)");

    std::vector<char> flags(static_cast<std::size_t>(p), 0);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (std::int64_t k = 0; k < p; ++k)
        flags[static_cast<std::size_t>(k)] = in_prescription_set(chi, target, k) ? 1 : 0;
    for (std::int64_t k = 0; k < p; ++k)
        if (flags[static_cast<std::size_t>(k)]) out.members.push_back(k);

    if (out.members.empty())
        throw std::runtime_error("build_S: empty set (predicted size " +
                                 std::to_string(out.predicted_size) + ")");
    return out;
}

SumWDiagnostic sum_W_diagnostic(const DirichletCharacter& chi,
                                const PrescriptionTarget& target) {
    target.validate();
    const std::int64_t p = static_cast<std::int64_t>(chi.p());
    long long total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (std::int64_t k = 0; k < p; ++k) total += weight_W(chi, target, k);
    SumWDiagnostic out;
    out.measured = total;
    out.predicted = static_cast<double>(p) *
                    std::pow(static_cast<double>(2 * target.window() + 1),
                             static_cast<double>(2 * target.K0 + 1));
    return out;
}

SelectedK select_k(const SumSpec& s, const PrescriptionTarget& target, double t) {
    if (target.K0 < 1)
        throw std::invalid_argument("select_k: need K0 >= 1");
    const PrescriptionSet S = build_S(s.chi, target);
    const std::vector<double> residuals = residual_profile(s, t, target.K0);
    SelectedK best;
    best.k = -1;
    best.residual = std::numeric_limits<double>::infinity();
    for (std::int64_t k : S.members) {
        const double r = residuals[static_cast<std::size_t>(k)];
        if (r < best.residual) {
            best.residual = r;
            best.k = k;
        }
    }
    return best;
}

OffdiagDiagnostic offdiag_diagnostic(const DirichletCharacter& chi,
                                     const PrescriptionTarget& target,
                                     std::int64_t l1, std::int64_t l2) {
    target.validate();
    const std::int64_t p = static_cast<std::int64_t>(chi.p());
    const std::int64_t K0 = target.K0;
    if (l1 == l2)
        throw std::invalid_argument("offdiag_diagnostic: need l1 != l2");
    if (std::abs(l1) <= K0 || std::abs(l1) >= p - K0 || std::abs(l2) <= K0 ||
        std::abs(l2) >= p - K0)
        throw std::invalid_argument("offdiag_diagnostic: need K0 < |l| < p - K0");

    const DirichletCharacter chibar = chi.conj_char();
    KahanComplexSum acc;
    for (std::int64_t k = K0 + 1; k < p - K0; ++k) {
        const std::int64_t w = weight_W(chi, target, k);
        if (w == 0) continue;
        acc.add(static_cast<double>(w) * chibar.eval(k - l1) * chi.eval(k - l2));
    }
    OffdiagDiagnostic out;
    out.lhs = std::abs(acc.value());
    const double d = static_cast<double>(target.d);
    out.rhs_scale = static_cast<double>(K0) * std::sqrt(static_cast<double>(p)) *
                    std::pow(d * std::log(d), static_cast<double>(2 * K0 + 1));
    return out;
}

}  // namespace mcs
