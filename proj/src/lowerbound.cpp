#include "mcs/lowerbound.hpp"

#include <cmath>
#include <stdexcept>

namespace mcs {

namespace {

cd truncation_weight(const SumSpec& s, std::int64_t l, double t) {
    const double lt = static_cast<double>(l) + t;
    return (unit(s.beta * lt) - unit(s.alpha * lt)) / lt;
}

}  // namespace

double choose_t(double alpha, double beta) {
    if (!(alpha >= 0.0) || !(beta > alpha))
        throw std::invalid_argument("choose_t: need beta > alpha >= 0");
    double best_t = 0.0;
    double best_margin = -1.0;
    for (int i = 10; i <= 90; ++i) {
        const double t = static_cast<double>(i) / 100.0;
        const double margin = std::min(dist_to_half_integers((alpha + beta) * t),
                                       dist_to_half_integers((beta - alpha) * t));
        if (margin > best_margin + 1e-15) {
            best_margin = margin;
            best_t = t;
        }
    }
    if (best_margin <= 0.0)
        throw std::runtime_error("choose_t: all scan candidates degenerate");
    return best_t;
}

PrescriptionTarget choose_xi(const DirichletCharacter& chi, const SumSpec& s, double t,
                             std::int64_t K0) {
    if (chi.is_principal())
        throw std::invalid_argument("choose_xi: principal character rejected");
    if (!(t > 0.0) || !(t < 1.0))
        throw std::invalid_argument("choose_xi: t must lie in (0, 1)");
    const std::int64_t d = static_cast<std::int64_t>(chi.order());
    PrescriptionTarget target;
    target.K0 = K0;
    target.d = d;
    target.xi_exp.resize(static_cast<std::size_t>(2 * K0 + 1));
    for (std::int64_t l = -K0; l <= K0; ++l) {
        const cd w = truncation_weight(s, l, t);
        std::int64_t b = 0;
        if (d == 2) {
            // real character: sign alignment, sgn(0) = +1
            const double lt = static_cast<double>(l) + t;
            const double num = std::cos(two_pi * s.beta * lt) - std::cos(two_pi * s.alpha * lt);
            b = (num / lt < 0.0) ? 1 : 0;
        } else if (std::abs(w) > 0.0) {
            // nearest element of mu_d to the weight's phase
            const double phase = std::arg(w) / two_pi;  // in (-1/2, 1/2]
            b = static_cast<std::int64_t>(std::llround(phase * static_cast<double>(d)));
            b = ((b % d) + d) % d;
        }
        target.xi_exp[static_cast<std::size_t>(l + K0)] = b;
    }
    return target;
}

TildeLower tilde_lower(const SumSpec& s, double t, const PrescriptionTarget& target,
                       std::int64_t k) {
    if (!in_prescription_set(s.chi, target, k))
        throw std::invalid_argument("tilde_lower: k is not in S for the given targets");
    const double sqrtp = std::sqrt(static_cast<double>(s.chi.p()));
    TildeLower out;
    out.value = std::abs(truncated_approx(s, k, t, std::max<std::int64_t>(target.K0, 1)));
    KahanSum acc;
    for (std::int64_t l = -target.K0; l <= target.K0; ++l)
        acc.add(std::abs(truncation_weight(s, l, t)));
    out.minorant =
        sqrtp / two_pi * std::cos(M_PI / 3.0 + M_PI / 10.0) * acc.value();
    if (out.value < out.minorant * (1.0 - 1e-9))
        throw std::runtime_error("tilde_lower: |F~| fell below its analytic minorant");
    return out;
}

double sumcos(double u1, double u2, double c1, double c2, std::int64_t K) {
    if (K < 2) throw std::invalid_argument("sumcos: need K >= 2");
    if (dist_to_half_integers(c1) == 0.0 || dist_to_half_integers(c2) == 0.0)
        throw std::invalid_argument("sumcos: c1, c2 must not lie in (1/2)Z");
    KahanSum acc;
    for (std::int64_t l = 1; l <= K; ++l) {
        const double x = static_cast<double>(l);
        acc.add(std::abs(std::sin(M_PI * (u1 * x + c1)) * std::sin(M_PI * (u2 * x + c2))) / x);
    }
    return acc.value();
}

LowerBoundWitness lower_bound_witness(const SumSpec& s) {
    if (s.chi.is_principal())
        throw std::invalid_argument("lower_bound_witness: principal character rejected");
    const std::int64_t p = static_cast<std::int64_t>(s.chi.p());
    if (p < 17)
        throw std::invalid_argument("lower_bound_witness: need p >= 17");

    LowerBoundWitness w;
    w.t = choose_t(s.alpha, s.beta);
    const std::int64_t K0 = default_K0(p);
    w.targets = choose_xi(s.chi, s, w.t, K0);
    const SelectedK sel = select_k(s, w.targets, w.t);
    w.k = sel.k;
    w.residual = sel.residual;
    const TildeLower tl = tilde_lower(s, w.t, w.targets, w.k);
    w.tilde_minorant = tl.minorant;
    w.tilde_value = truncated_approx(s, w.k, w.t, K0);

    const double sqrtp = std::sqrt(static_cast<double>(p));
    w.lower_ratio = tl.value / (sqrtp * std::log(static_cast<double>(K0) + 1.0));
    const double theta = (static_cast<double>(w.k) + w.t) / static_cast<double>(p);
    const double fval = std::abs(direct_sum(s, theta));
    w.final_ratio = fval / (sqrtp * std::log(std::log(static_cast<double>(p))));
    return w;
}

}  // namespace mcs
