#pragma once

#include "septic/poly.hpp"

namespace septic {

/// The pair (a, b) defining F(x) = x^7 + a x + b.
struct Trinomial {
    Int a;
    Int b;

    Trinomial(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}
    Trinomial(long a_, long b_) : a(a_), b(b_) {}

    PolyZ poly() const;

    /// Delta = -(6^6 a^7 + 7^7 b^6).
    Int discriminant() const;

    /// Every classification routine assumes nu_p(a) <= 5 or nu_p(b) <= 6 for all p.
    /// Throws HypothesisViolation; for inputs whose gcd cannot be certified
    /// within the trial-division bound the check errs on the side of refusal.
    void require_standing_hypothesis() const;
};

} // namespace septic
