#pragma once

#include <string>

#include "septic/newton.hpp"

namespace septic {

/// Multiset of (ramification index e, residue degree f) pairs with sum e*f
/// equal to the field degree.
struct SplittingType {
    std::vector<std::pair<int, int>> factors; // kept sorted

    void add(int e, int f);
    int degree_sum() const;
    /// Number of primes with residue degree f.
    int primes_with_f(int f) const;
    std::vector<int> f_profile() const; // sorted residue degrees
    std::string str() const;

    friend bool operator==(const SplittingType& a, const SplittingType& b) {
        return a.factors == b.factors;
    }
};

struct OreResult {
    SplittingType type;        // complete when `complete` is true
    long index_lower = 0;      // Ore part (1): first-order lower bound, balanced lifts
    bool regular = false;      // p-regular at first order
    bool complete = false;     // splitting type fully determined
    bool index_exact = false;  // index_lower is the exact nu_p of the index
    std::vector<std::string> notes;       // per-factor remarks (second order, refinements)
    std::vector<std::string> unresolved;  // configurations left unfinished
};

/// Factorization data of p Z_K via first-order Newton polygons, with lift
/// refinement for repeated residual roots on integer-slope sides and the
/// dedicated second-order treatments at p = 2, 3. `F` must be monic and
/// squarefree over Q.
OreResult ore_factorization(const PolyZ& F, long p);

} // namespace septic
