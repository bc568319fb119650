#include "septic/integers.hpp"

#include <algorithm>

namespace septic {

Valuation padic_valuation(const Int& n, long p) {
    if (n == 0) return Valuation::inf();
    Int tmp;
    unsigned long k = mpz_remove(tmp.get_mpz_t(), n.get_mpz_t(), Int(p).get_mpz_t());
    return Valuation::of(static_cast<long>(k));
}

Int unit_part(const Int& n, long p) {
    if (n == 0) throw UndefinedUnitPart();
    Int out;
    mpz_remove(out.get_mpz_t(), n.get_mpz_t(), Int(p).get_mpz_t());
    return out;
}

bool is_prime(long p) {
    if (p < 2) return false;
    return mpz_probab_prime_p(Int(p).get_mpz_t(), 30) != 0;
}

std::vector<long> primes_up_to(long bound) {
    std::vector<long> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(bound) + 1, true);
    for (long i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (long j = 2 * i; j <= bound; j += i) sieve[j] = false;
    }
    return out;
}

namespace {

const std::vector<long>& cached_primes_1e6() {
    static const std::vector<long> primes = primes_up_to(1000000);
    return primes;
}

// product of all primes up to 10^6, built once (about 1.4 Mbit)
const Int& primorial_1e6() {
    static const Int prod = [] {
        // balanced product tree
        std::vector<Int> layer;
        for (long p : cached_primes_1e6()) layer.emplace_back(p);
        while (layer.size() > 1) {
            std::vector<Int> next;
            for (size_t i = 0; i + 1 < layer.size(); i += 2) next.push_back(layer[i] * layer[i + 1]);
            if (layer.size() % 2) next.push_back(layer.back());
            layer = std::move(next);
        }
        return layer.front();
    }();
    return prod;
}

} // namespace

std::vector<std::pair<long, long>> trial_factor(const Int& n, long bound, Int& leftover) {
    std::vector<std::pair<long, long>> out;
    leftover = abs(n);
    if (leftover <= 1) return out;

    if (bound == 1000000 && mpz_sizeinbase(leftover.get_mpz_t(), 2) > 24) {
        // one reduction of the primorial collects every small prime divisor
        Int red = primorial_1e6() % leftover;
        Int g = gcd(red, leftover);
        while (g > 1) {
            for (long p : cached_primes_1e6()) {
                if (g == 1) break;
                if (Int(p) * p > g && mpz_probab_prime_p(g.get_mpz_t(), 30) != 0) {
                    // the rest of g is a single prime
                    long q = g.get_si();
                    Int rest;
                    unsigned long e = mpz_remove(rest.get_mpz_t(), leftover.get_mpz_t(), g.get_mpz_t());
                    out.emplace_back(q, static_cast<long>(e));
                    leftover = rest;
                    g = 1;
                    break;
                }
                if (mpz_divisible_ui_p(g.get_mpz_t(), static_cast<unsigned long>(p))) {
                    Int rest;
                    unsigned long e = mpz_remove(rest.get_mpz_t(), leftover.get_mpz_t(), Int(p).get_mpz_t());
                    out.emplace_back(p, static_cast<long>(e));
                    leftover = rest;
                    mpz_divexact_ui(g.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(p));
                }
            }
            break;
        }
        std::sort(out.begin(), out.end());
    } else {
        for (long p : cached_primes_1e6()) {
            if (p > bound || leftover == 1) break;
            if (mpz_divisible_ui_p(leftover.get_mpz_t(), static_cast<unsigned long>(p))) {
                Int rest;
                unsigned long e = mpz_remove(rest.get_mpz_t(), leftover.get_mpz_t(), Int(p).get_mpz_t());
                out.emplace_back(p, static_cast<long>(e));
                leftover = rest;
            }
            if (Int(p) * p > leftover) break;
        }
    }
    if (leftover > 1 && mpz_probab_prime_p(leftover.get_mpz_t(), 30) != 0) {
        // leftover is prime; record it when it fits a long
        if (leftover.fits_slong_p()) {
            out.emplace_back(leftover.get_si(), 1);
            leftover = 1;
        }
    }
    return out;
}

long mod_long(const Int& n, long m) {
    Int r = n % m;
    if (r < 0) r += m;
    return r.get_si();
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace septic
