#pragma once

#include "septic/newton.hpp"

namespace septic {

/// Outcome of a second-order refinement of the one non-regular side that
/// arises at p = 2 (nu2(a) in {2,4}) or p = 3 (nu3(a) = 3) for trinomials
/// x^7 + a x + b. `primes` covers exactly the refined side; the other sides
/// of the first-order polygon are handled by the caller.
struct SecondOrderResult {
    std::vector<std::pair<int, int>> primes; // (e, f), summing e*f = 6
    std::vector<std::pair<int, long>> polygon_points; // second-order polygon ordinates
    std::string key_polynomial;
    std::vector<std::string> residuals;
};

/// Requires the trinomial shape and one of the supported configurations;
/// anything else throws UnsupportedSecondOrder.
SecondOrderResult second_order_refine(const PolyZ& F, long p);

/// omega2 = e1[nu_p, x, h1/e1] applied to a polynomial in x:
/// min over monomials c x^j of e1*nu_p(c) + h1*j. Infinite for 0.
Valuation omega2_valuation(const PolyZ& f, long p, long h1, long e1);

} // namespace septic
