#pragma once

#include <string>
#include <vector>

#include "septic/assemble.hpp"

namespace septic {

/// Machine-readable report for one trinomial. JSON fields keep a fixed order
/// and integers are decimal strings, so a parse/serialize round trip is
/// byte-identical.
struct ReportDocument {
    Int a, b;
    bool irreducible = false;
    Int discriminant;
    std::vector<NuEvidence> primes;
    long field_index = 1;
    bool integrally_closed = false;
    bool closedness_certified = true;
    bool monogenic_obstruction = false;
    std::vector<std::string> discrepancies;

    std::string to_json() const;       // canonical single-line JSON
    std::string to_text() const;       // human-readable report
    static std::string csv_header();
    std::string to_csv_row() const;
};

/// Default prime set for a report: {2,3,5,7} plus all p <= 100 with p^2 | disc.
std::vector<long> report_primes(const Trinomial& t);

/// Full report: classifier + engine evidence for every prime in the set.
/// A positive scan budget adds generator-scan bounds per prime.
ReportDocument build_report(const Trinomial& t, long scan_budget = 0, unsigned long seed = 1);

} // namespace septic
