#include "mcs/charcore.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace mcs {

namespace {

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 r = 1, b = a % m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t q = 3; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

RootOfUnity RootOfUnity::reduced() const {
    std::int64_t d = den;
    std::int64_t n = ((num % d) + d) % d;
    std::int64_t g = std::gcd(n, d);
    if (g == 0) g = d;  // n == 0
    return {n / g, d / g};
}

RootOfUnity RootOfUnity::conj() const { return RootOfUnity{-num, den}.reduced(); }

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    std::int64_t l = std::lcm(den, o.den);
    return RootOfUnity{num * (l / den) + o.num * (l / o.den), l}.reduced();
}

RootOfUnity RootOfUnity::pow(std::int64_t e) const {
    std::int64_t n = ((num % den) + den) % den;
    std::int64_t ne = (static_cast<std::int64_t>((__int128)n * e % den) + den) % den;
    return RootOfUnity{ne, den}.reduced();
}

bool RootOfUnity::operator==(const RootOfUnity& o) const {
    RootOfUnity a = reduced(), b = o.reduced();
    return a.num == b.num && a.den == b.den;
}

cd RootOfUnity::to_complex() const {
    const RootOfUnity r = reduced();
    // quarter-turn values exactly, so real characters stay exactly real
    if (r.den == 1) return cd{1.0, 0.0};
    if (r.den == 2) return cd{-1.0, 0.0};
    if (r.den == 4) return r.num == 1 ? cd{0.0, 1.0} : cd{0.0, -1.0};
    return unit(static_cast<double>(r.num) / static_cast<double>(r.den));
}

PrimeModulus::PrimeModulus(std::uint64_t p, std::uint64_t table_cap) : p_(p) {
    if (p < 3)
        throw std::invalid_argument("PrimeModulus: p must be an odd prime >= 3, got " +
                                    std::to_string(p));
    if (!is_prime(p))
        throw std::invalid_argument("PrimeModulus: trial-division primality test failed for " +
                                    std::to_string(p));
    if (p > table_cap)
        throw std::invalid_argument("PrimeModulus: p = " + std::to_string(p) +
                                    " exceeds the dlog table cap " + std::to_string(table_cap));

    const auto factors = prime_factors(p - 1);
    g_ = 0;
    for (std::uint64_t g = 2; g < p; ++g) {
        bool primitive = true;
        for (std::uint64_t q : factors) {
            if (powmod(g, (p - 1) / q, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            g_ = g;
            break;
        }
    }
    if (g_ == 0)
        throw std::invalid_argument("PrimeModulus: no primitive root found mod " +
                                    std::to_string(p));

    dlog_.assign(p, 0);
    std::uint64_t x = 1;
    for (std::uint64_t j = 0; j + 1 < p; ++j) {
        dlog_[x] = static_cast<std::uint32_t>(j);
        x = x * g_ % p;
    }
}

std::uint64_t PrimeModulus::reduce(std::int64_t n) const {
    std::int64_t p = static_cast<std::int64_t>(p_);
    std::int64_t r = n % p;
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const PrimeModulus> m,
                                       std::uint64_t index)
    : mod_(std::move(m)), c_(index) {
    const std::uint64_t pm1 = mod_->p() - 1;
    if (c_ >= pm1)
        throw std::invalid_argument("DirichletCharacter: index must lie in [0, p-2]");
    d_ = pm1 / std::gcd(c_, pm1);
    if (c_ == 0) d_ = 1;
}

std::optional<RootOfUnity> DirichletCharacter::value(std::int64_t n) const {
    std::uint64_t r = mod_->reduce(n);
    if (r == 0) return std::nullopt;
    const std::uint64_t pm1 = mod_->p() - 1;
    std::uint64_t e = (unsigned __int128)c_ * mod_->dlog(r) % pm1;
    return RootOfUnity{static_cast<std::int64_t>(e), static_cast<std::int64_t>(pm1)};
}

std::int64_t DirichletCharacter::mu_d_exponent(std::int64_t n) const {
    std::uint64_t r = mod_->reduce(n);
    if (r == 0)
        throw std::invalid_argument("mu_d_exponent: chi(n) = 0 has no exponent");
    const std::uint64_t pm1 = mod_->p() - 1;
    const std::uint64_t g0 = pm1 / d_;  // = gcd(c, p-1)
    std::uint64_t cp = c_ / g0;
    return static_cast<std::int64_t>((unsigned __int128)cp * mod_->dlog(r) % d_);
}

cd DirichletCharacter::eval(std::int64_t n) const {
    auto v = value(n);
    return v ? v->to_complex() : cd{0.0, 0.0};
}

DirichletCharacter DirichletCharacter::conj_char() const {
    const std::uint64_t pm1 = mod_->p() - 1;
    return DirichletCharacter(mod_, c_ == 0 ? 0 : pm1 - c_);
}

DirichletCharacter legendre_character(std::shared_ptr<const PrimeModulus> m) {
    return DirichletCharacter(m, (m->p() - 1) / 2);
}

cd gauss_sum(const DirichletCharacter& chi) {
    if (chi.is_principal())
        throw std::invalid_argument("gauss_sum: principal character rejected");
    const std::uint64_t p = chi.p();
    KahanComplexSum acc;
    for (std::uint64_t n = 1; n < p; ++n)
        acc.add(chi.eval(static_cast<std::int64_t>(n)) *
                unit(static_cast<double>(n) / static_cast<double>(p)));
    return acc.value();
}

std::vector<DirichletCharacter> enumerate_characters(
    std::shared_ptr<const PrimeModulus> m, bool non_principal_only) {
    std::vector<DirichletCharacter> out;
    const std::uint64_t pm1 = m->p() - 1;
    out.reserve(pm1);
    for (std::uint64_t c = non_principal_only ? 1 : 0; c < pm1; ++c)
        out.emplace_back(m, c);
    return out;
}

std::optional<DirichletCharacter> character_of_order(
    std::shared_ptr<const PrimeModulus> m, std::uint64_t d) {
    const std::uint64_t pm1 = m->p() - 1;
    if (d == 0 || pm1 % d != 0) return std::nullopt;
    return DirichletCharacter(m, pm1 / d);
}

}  // namespace mcs
