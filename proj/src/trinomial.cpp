#include "septic/trinomial.hpp"

namespace septic {

PolyZ Trinomial::poly() const {
    std::vector<Int> c(8, Int(0));
    c[0] = b;
    c[1] = a;
    c[7] = 1;
    return PolyZ(std::move(c));
}

Int Trinomial::discriminant() const {
    Int a7, b6;
    mpz_pow_ui(a7.get_mpz_t(), a.get_mpz_t(), 7);
    mpz_pow_ui(b6.get_mpz_t(), b.get_mpz_t(), 6);
    return Int(-(Int(46656) * a7 + Int(823543) * b6)); // 6^6 = 46656, 7^7 = 823543
}

void Trinomial::require_standing_hypothesis() const {
    // a violation needs a prime p with p^6 | a and p^7 | b, hence p^6 | gcd(a,b)
    Int g = gcd(a, b);
    if (g <= 1) return;
    Int leftover;
    auto small = trial_factor(g, 1000000, leftover);
    for (auto& [p, e] : small) {
        if (e < 6) continue;
        if (padic_valuation(a, p).value() >= 6 && !(padic_valuation(b, p) < Valuation::of(7)))
            throw HypothesisViolation("nu_" + std::to_string(p) + "(a) >= 6 and nu_" +
                                      std::to_string(p) + "(b) >= 7");
    }
    if (leftover > 1) {
        // every remaining prime of gcd(a,b) exceeds 10^6; a violating p would
        // contribute p^6 > 10^36
        Int bound;
        mpz_ui_pow_ui(bound.get_mpz_t(), 10, 36);
        if (leftover >= bound)
            throw HypothesisViolation("cannot certify the standing hypothesis: gcd(a,b) has a huge unfactored part");
    }
}

} // namespace septic
