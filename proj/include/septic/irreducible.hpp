#pragma once

#include "septic/poly.hpp"

namespace septic {

/// Exact irreducibility test over Q for monic integer polynomials.
/// Decision chain: integer-root test, Eisenstein, irreducibility mod small
/// primes, then a complete Hensel-lift recombination fallback with the
/// Landau-Mignotte coefficient bound.
bool is_irreducible_over_Q(const PolyZ& f);

} // namespace septic
