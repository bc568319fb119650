#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "septic/poly.hpp"
#include "septic/trinomial.hpp"

namespace septic {

struct ClosednessVerdict {
    bool closed = true;
    std::vector<int> violated;       // condition identifiers 1..6
    bool certified = true;           // false when a square part could not be ruled out
    std::vector<std::string> notes;
};

/// Integral closedness of Z[alpha] via the six congruence conditions.
/// Requires F irreducible.
ClosednessVerdict integral_closed(const Trinomial& t);

/// The closedness conditions localized at one prime: true iff p does not
/// divide (Z_K : Z[alpha]). Exact for any given p, no factoring needed.
bool closed_at_prime(const Trinomial& t, long p);

/// nu_2(i(K)) from the congruence table. Rows are evaluated as a disjoint
/// predicate list; a double match raises TableAmbiguity.
long nu2_index(const Trinomial& t);

/// nu_3(i(K)) from the congruence table.
long nu3_index(const Trinomial& t);

/// Always 0 for p >= 5; verify = true additionally runs the supporting
/// count argument (mod-5 case analysis, polynomial counting for p >= 7).
long nup_index(const Trinomial& t, long p, bool verify = false);

struct IndexReport {
    long nu2 = 0;
    long nu3 = 0;
    std::map<long, long> nup_nontrivial; // always empty: p >= 5 never divides i(K)
    long field_index = 1;
    bool monogenic_obstruction = false;
};

/// Assembles i(K) = 2^{nu2} 3^{nu3} and checks membership in
/// {1,2,3,6,8,9,18,24,72}.
IndexReport field_index(const Trinomial& t);

/// Parameters of the monogenic-family construction F = x^7 + 2^u a x + 2^v b.
struct MonogenicFamilyParams {
    long u;
    long v;
    Int a;
    Int b;

    Trinomial trinomial() const; // (2^u a, 2^v b)
    /// Checks the stated hypotheses; throws Error naming the failed one.
    void validate() const;
};

struct MonogenicCertificate {
    enum class Status { Success, Discrepancy };
    Status status = Status::Success;
    long x = 0, y = 0;          // the solution of v*x - 7*y = 1, 0 <= x <= 6
    PolyZ generator_charpoly;   // minimal polynomial g of theta = alpha^x / 2^y
    long ind_alpha_lower = 0;   // nu_2 polygon index of F (>= 1: F not monogenic)
    bool g_integer = false;
    bool g_eisenstein_at_2 = false;
    std::string detail;
};

/// Certifies: F(x) = x^7 + 2^u a x + 2^v b is non-monogenic while K is
/// monogenic (theta = alpha^x / 2^y is a power-basis generator). When the
/// 2-adic polygon fails the single-side claim, returns a Discrepancy result.
MonogenicCertificate monogenic_family_certificate(const MonogenicFamilyParams& params);

} // namespace septic
