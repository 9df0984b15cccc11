#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "mcs/common.hpp"

namespace mcs {

bool is_prime(std::uint64_t n);

// e(num/den), held exactly by its exponent. den > 0, 0 <= num < den.
struct RootOfUnity {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static RootOfUnity one() { return {0, 1}; }
    RootOfUnity reduced() const;
    RootOfUnity conj() const;
    RootOfUnity operator*(const RootOfUnity& o) const;
    RootOfUnity pow(std::int64_t e) const;
    bool operator==(const RootOfUnity& o) const;
    cd to_complex() const;
};

// Prime p with its smallest primitive root g and the full discrete-log
// table dlog[g^j mod p] = j. Immutable after construction.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t p,
                          std::uint64_t table_cap = (1ull << 24));

    std::uint64_t p() const { return p_; }
    std::uint64_t primitive_root() const { return g_; }
    // n must be in [1, p)
    std::uint32_t dlog(std::uint64_t n) const { return dlog_[n]; }
    // reduce any integer into [0, p)
    std::uint64_t reduce(std::int64_t n) const;

private:
    std::uint64_t p_;
    std::uint64_t g_;
    std::vector<std::uint32_t> dlog_;
};

// Character mod p given by its index c: chi(g^j) = e(c*j/(p-1)).
class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const PrimeModulus> m, std::uint64_t index);

    const PrimeModulus& modulus() const { return *mod_; }
    std::shared_ptr<const PrimeModulus> modulus_ptr() const { return mod_; }
    std::uint64_t p() const { return mod_->p(); }
    std::uint64_t index() const { return c_; }
    std::uint64_t order() const { return d_; }
    bool is_principal() const { return c_ == 0; }

    // exact value: nullopt when p | n, else e(c*dlog(n)/(p-1))
    std::optional<RootOfUnity> value(std::int64_t n) const;
    // exponent a in [0, d) with chi(n) = e(a/d); n must not be divisible by p
    std::int64_t mu_d_exponent(std::int64_t n) const;
    cd eval(std::int64_t n) const;

    DirichletCharacter conj_char() const;

private:
    std::shared_ptr<const PrimeModulus> mod_;
    std::uint64_t c_;
    std::uint64_t d_;
};

DirichletCharacter legendre_character(std::shared_ptr<const PrimeModulus> m);

// Direct summation with compensated accumulation. Rejects the principal
// character.
cd gauss_sum(const DirichletCharacter& chi);

std::vector<DirichletCharacter> enumerate_characters(
    std::shared_ptr<const PrimeModulus> m, bool non_principal_only = false);

// A character of exact order d, if one exists (d | p-1); smallest index.
std::optional<DirichletCharacter> character_of_order(
    std::shared_ptr<const PrimeModulus> m, std::uint64_t d);

}  // namespace mcs
