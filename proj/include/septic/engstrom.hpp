#pragma once

#include "septic/ore.hpp"

namespace septic {

/// Number of monic irreducible polynomials of degree f over F_p.
long count_monic_irreducibles(long p, int f);

/// Lemma criterion: p divides i(K) iff the number of primes with residue
/// degree f exceeds the number of monic irreducibles of degree f, for some f.
bool is_common_index_divisor(const SplittingType& type, long p);

struct EngstromKey {
    long p;
    SplittingType type;
};

/// Tabulated nu_p(i(K)) for the splitting types the degree-7 results pin
/// down (matched on the residue-degree profile, ramification recorded).
/// Types that are not common index divisors return 0; anything else that is
/// a divisor but untabulated throws NotTabulated.
long engstrom_nu(const EngstromKey& key);

/// Sum (e-1) f over the splitting type; the tame value of nu_p(d_K).
/// Throws WildRamification when p divides some e.
long tame_dK_valuation(const SplittingType& type, long p);

} // namespace septic
