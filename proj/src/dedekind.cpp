#include "septic/dedekind.hpp"

#include "septic/fp.hpp"

namespace septic {

bool dedekind_divides_index(const PolyZ& f, long p) {
    if (!f.is_monic()) throw Error("dedekind_divides_index: monic input expected");
    PolyModP fbar = PolyModP::from_int_poly(f, p);
    auto factors = factor_over_Fp(fbar);

    PolyModP gbar = PolyModP::constant(p, 1); // radical
    PolyModP hbar = PolyModP::constant(p, 1); // cofactor, carries multiplicities - 1
    for (auto& fk : factors) {
        gbar = gbar * fk.factor;
        for (int i = 1; i < fk.multiplicity; ++i) hbar = hbar * fk.factor;
    }

    PolyZ g = gbar.lift_nonneg(), h = hbar.lift_nonneg();
    PolyZ diff = g * h - f;
    std::vector<Int> tc(diff.coeffs());
    for (auto& v : tc) {
        Int q;
        mpz_divexact_ui(q.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
        v = q;
    }
    PolyModP T = PolyModP::from_int_poly(PolyZ(std::move(tc)), p);

    PolyModP common = gcd(gcd(T, gbar), hbar);
    return common.degree() > 0;
}

} // namespace septic
