#include "septic/irreducible.hpp"

#include <algorithm>
#include <bitset>

#include "septic/fp.hpp"

namespace septic {

namespace {

// one linear Hensel step: F = g*h (mod m), s*g + t*h = 1 (mod q)  ->  mod m*q
struct LiftPair {
    PolyZ g, h;
};

PolyModP reduce_div(const PolyModP& a, const PolyModP& b) {
    PolyModP q, r;
    PolyModP::divrem(a, b, q, r);
    return q;
}

PolyModP reduce_mod(const PolyModP& a, const PolyModP& b) {
    PolyModP q, r;
    PolyModP::divrem(a, b, q, r);
    return r;
}

// Bezout s*g + t*h = 1 over F_q for coprime g, h
void bezout(const PolyModP& g, const PolyModP& h, PolyModP& s, PolyModP& t) {
    long p = g.p();
    PolyModP r0 = g, r1 = h;
    PolyModP s0 = PolyModP::constant(p, 1), s1(p);
    PolyModP t0(p), t1 = PolyModP::constant(p, 1);
    while (!r1.is_zero()) {
        PolyModP q, r;
        PolyModP::divrem(r0, r1, q, r);
        PolyModP s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.degree() != 0) throw Error("bezout: inputs not coprime");
    long lc = r0.coeff(0);
    long inv = 1, tt = 0, newt = 1, rr = p, newr = lc;
    while (newr != 0) {
        long q = rr / newr;
        std::swap(tt -= q * newt, newt);
        std::swap(rr -= q * newr, newr);
    }
    inv = tt < 0 ? tt + p : tt;
    s = s0 * inv;
    t = t0 * inv;
}

PolyZ mod_coeffs(const PolyZ& f, const Int& m) {
    std::vector<Int> c(f.coeffs());
    for (auto& v : c) {
        v %= m;
        if (v < 0) v += m;
    }
    return PolyZ(std::move(c));
}

PolyZ balance_coeffs(const PolyZ& f, const Int& m) {
    std::vector<Int> c(f.coeffs());
    for (auto& v : c) {
        v %= m;
        if (v < 0) v += m;
        if (2 * v > m) v -= m;
    }
    return PolyZ(std::move(c));
}

// lift a monic factor g0 of F mod q (with monic cofactor h0) to modulus q^steps
LiftPair hensel_lift(const PolyZ& F, const PolyModP& g0, const PolyModP& h0, long q, int steps) {
    PolyModP s, t;
    bezout(g0, h0, s, t);
    PolyZ g = g0.lift_nonneg(), h = h0.lift_nonneg();
    Int m = q;
    for (int k = 1; k < steps; ++k) {
        PolyZ e = F - g * h;
        std::vector<Int> ec(e.coeffs());
        for (auto& v : ec) {
            Int quot;
            mpz_fdiv_q(quot.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
            v = quot;
        }
        PolyModP E = PolyModP::from_int_poly(PolyZ(std::move(ec)), q);
        PolyModP u = reduce_mod(t * E, g0);
        PolyModP v = reduce_div(E - u * h0, g0);
        g = mod_coeffs(g + u.lift_nonneg() * m, Int(m * q));
        h = mod_coeffs(h + v.lift_nonneg() * m, Int(m * q));
        // keep lifts monic
        m *= q;
    }
    return {g, h};
}

bool has_integer_root(const PolyZ& f) {
    // fast path for small roots; completeness comes from the Hensel fallback
    if (f.coeff(0) == 0) return true;
    for (long r = -100; r <= 100; ++r) {
        if (r == 0) continue;
        if (!mpz_divisible_p(f.coeff(0).get_mpz_t(), Int(r).get_mpz_t())) continue;
        if (f.eval(Int(r)) == 0) return true;
    }
    return false;
}

bool eisenstein_at_some_prime(const PolyZ& f) {
    Int leftover;
    auto fac = trial_factor(f.coeff(0), 100000, leftover);
    for (auto& [p, e] : fac) {
        if (e != 1) continue;
        bool ok = true;
        for (int i = 1; i < f.degree() && ok; ++i)
            if (!mpz_divisible_ui_p(f.coeff(i).get_mpz_t(), static_cast<unsigned long>(p))) ok = false;
        if (ok) return true;
    }
    return false;
}

} // namespace

bool is_irreducible_over_Q(const PolyZ& f) {
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    if (!f.is_monic()) throw Error("is_irreducible_over_Q: monic input expected");
    if (f.coeff(0) == 0) return false;
    if (poly_discriminant(f) == 0) return false; // repeated factor

    if (has_integer_root(f)) return false;
    if (eisenstein_at_some_prime(f)) return true;

    // degree-set sieve + mod-p irreducibility certificates
    static const long certification_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
    std::bitset<64> possible; // possible proper factor degrees 1..n-1
    for (int d = 1; d < n; ++d) possible.set(static_cast<size_t>(d));
    long good_q = 0;
    std::vector<FpFactor> good_factors;
    for (long p : certification_primes) {
        PolyModP fp = PolyModP::from_int_poly(f, p);
        if (fp.degree() != n) continue;
        if (!is_squarefree_mod_p(fp)) continue;
        auto factors = factor_over_Fp(fp);
        if (factors.size() == 1) return true; // irreducible mod p
        if (good_q == 0) {
            good_q = p;
            good_factors = factors;
        }
        std::bitset<64> sums;
        sums.set(0);
        for (auto& fk : factors) {
            std::bitset<64> next = sums;
            for (int d = 0; d + fk.factor.degree() <= n; ++d)
                if (sums.test(static_cast<size_t>(d))) next.set(static_cast<size_t>(d + fk.factor.degree()));
            sums = next;
        }
        possible &= sums;
        bool any = false;
        for (int d = 1; d < n; ++d) any = any || possible.test(static_cast<size_t>(d));
        if (!any) return true;
    }

    if (good_q == 0) {
        // every certification prime divides the discriminant; extend the search
        for (long p : primes_up_to(10000)) {
            PolyModP fp = PolyModP::from_int_poly(f, p);
            if (fp.degree() != n || !is_squarefree_mod_p(fp)) continue;
            good_q = p;
            good_factors = factor_over_Fp(fp);
            break;
        }
        if (good_q == 0) throw Error("is_irreducible_over_Q: no squarefree reduction found");
        if (good_factors.size() == 1) return true;
    }

    // complete fallback: Hensel-lift subsets and trial-divide against the
    // Landau-Mignotte bound 2^{deg} * ||f||_2
    Int norm2 = 0;
    for (auto& c : f.coeffs()) norm2 += c * c;
    Int bound = sqrt(norm2) + 1;
    bound <<= (static_cast<unsigned>(n) / 2 + 1);
    bound = 2 * bound + 1;
    int steps = 1;
    Int modulus = good_q;
    while (modulus <= bound) {
        modulus *= good_q;
        ++steps;
    }

    size_t k = good_factors.size();
    std::vector<PolyZ> lifted(k);
    for (size_t i = 0; i < k; ++i) {
        PolyModP cof = PolyModP::constant(good_q, 1);
        for (size_t j = 0; j < k; ++j)
            if (j != i) cof = cof * good_factors[j].factor;
        lifted[i] = hensel_lift(f, good_factors[i].factor, cof, good_q, steps).g;
    }

    for (size_t mask = 1; mask + 1 < (size_t{1} << k); ++mask) {
        int d = 0;
        for (size_t i = 0; i < k; ++i)
            if (mask & (size_t{1} << i)) d += good_factors[i].factor.degree();
        if (d < 1 || 2 * d > n || !possible.test(static_cast<size_t>(d))) continue;
        PolyZ cand = PolyZ::constant(1);
        for (size_t i = 0; i < k; ++i)
            if (mask & (size_t{1} << i)) cand = mod_coeffs(cand * lifted[i], modulus);
        cand = balance_coeffs(cand, modulus);
        if (cand.degree() != d || !cand.is_monic()) continue;
        PolyZ rem;
        PolyZ q = f.divrem_monic(cand, rem);
        (void)q;
        if (rem.is_zero()) return false;
    }
    return true;
}

} // namespace septic
