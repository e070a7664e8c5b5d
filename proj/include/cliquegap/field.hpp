#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cliquegap/errors.hpp"
#include "cliquegap/rng.hpp"

namespace cg {

// Field element: canonical residue in [0, p). Callers keep values canonical;
// PrimeField operations assume and preserve that.
using Fe = std::uint64_t;

class PrimeField {
public:
    // Checks primality by trial division; the fields in scope are tiny.
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    Fe add(Fe a, Fe b) const {
        const Fe s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Fe sub(Fe a, Fe b) const { return a >= b ? a - b : a + (p_ - b); }
    Fe neg(Fe a) const { return a == 0 ? 0 : p_ - a; }
    Fe mul(Fe a, Fe b) const { return static_cast<Fe>((u128)a * b % p_); }

    Fe pow(Fe a, std::uint64_t e) const {
        Fe base = a % p_, acc = 1 % p_;
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    // a^{-1} by Fermat; p prime.
    Fe inv(Fe a) const {
        if (a == 0) throw InversionOfZero("inverse of zero in F_" + std::to_string(p_));
        return pow(a, p_ - 2);
    }

    Fe from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Fe>(r);
    }

    // n! mod p as a field element. Zero when n >= p.
    Fe factorial(std::uint64_t n) const {
        Fe acc = 1 % p_;
        for (std::uint64_t i = 2; i <= n; ++i) acc = mul(acc, i % p_);
        return acc;
    }

    std::vector<Fe> add_vec(std::span<const Fe> a, std::span<const Fe> b) const;
    std::vector<Fe> scale_vec(Fe c, std::span<const Fe> a) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

// --- Point enumeration over F^m ---------------------------------------------
//
// F^m is enumerated in base-p order with the first coordinate most
// significant. This is the fixed position order of every point-indexed word,
// so serialized words are deterministic.

std::uint64_t point_index(std::span<const Fe> x, std::uint64_t p);
std::vector<Fe> point_at(std::uint64_t index, std::uint64_t p, std::size_t m);

// p^m with overflow check.
std::uint64_t pow_u64(std::uint64_t p, std::uint64_t m);
u128 pow_u128(std::uint64_t p, std::uint64_t m);

// --- Mixed-radix randomness indices ------------------------------------------
//
// Tester/decoder randomness spaces are [0, R) with R the product of component
// radices. An index decodes most-significant component first. Enumerating
// indices in order therefore enumerates component tuples lexicographically.

std::vector<std::uint64_t> mixed_radix_digits(u128 r, std::span<const u128> radices);

u128 mixed_radix_size(std::span<const u128> radices);

std::string u128_str(u128 v);

// Ordered pairs (λ1, λ2) of distinct nonzero field elements, indexed by
// [0, (p-1)(p-2)). Used by the two-evaluation-point decoders.
std::pair<Fe, Fe> distinct_nonzero_pair(std::uint64_t index, std::uint64_t p);

} // namespace cg
