#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <vector>

#include "septic/errors.hpp"

namespace septic {

using Int = mpz_class;

/// p-adic valuation value: a non-negative integer or +infinity (for 0).
struct Valuation {
    bool infinite = false;
    long v = 0;

    static Valuation inf() { return {true, 0}; }
    static Valuation of(long k) { return {false, k}; }

    bool is_inf() const { return infinite; }
    long value() const { return infinite ? -1 : v; }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite == b.infinite && (a.infinite || a.v == b.v);
    }
    // infinity compares greater than everything finite
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.v < b.v;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return a < b || a == b; }

    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite || b.infinite) return inf();
        return of(a.v + b.v);
    }
};

Valuation padic_valuation(const Int& n, long p);

inline Valuation padic_valuation(long n, long p) { return padic_valuation(Int(n), p); }

/// n / p^{nu_p(n)}, sign preserved. Throws UndefinedUnitPart on n = 0.
Int unit_part(const Int& n, long p);

bool is_prime(long p);

/// Primes up to (and including) bound, bound <= 10^6.
std::vector<long> primes_up_to(long bound);

/// Small prime factors of |n| up to `bound`, each with multiplicity removed exactly.
/// Returns (prime, exponent) pairs; `leftover` receives the unfactored cofactor (>= 1).
std::vector<std::pair<long, long>> trial_factor(const Int& n, long bound, Int& leftover);

long mod_long(const Int& n, long m); // representative in [0, m)

// deterministic 64-bit mixer used by the seeded samplers
std::uint64_t splitmix64(std::uint64_t& state);

} // namespace septic
