#pragma once

#include "septic/report.hpp"

namespace septic {

struct ScanOptions {
    long a_lo = 0, a_hi = 0;
    long b_lo = 0, b_hi = 0;
    bool run_checks = false;     // cross-validate classifier vs engine vs Lemma
    unsigned long seed = 1;
    long scan_budget = 0;        // per-field generator scan when > 0 (checks mode)
};

struct BatchSummary {
    long pairs = 0;
    long irreducible = 0;
    long discrepancies = 0;
    long unsupported = 0;
    std::vector<std::string> findings;
};

/// A scan work item: the report plus check results for one (a, b).
struct BatchRow {
    ReportDocument report;
};

/// Grid scan, OpenMP over the (a, b) rectangle; output order is by row-major
/// pair index regardless of thread count.
BatchSummary scan_grid(const ScanOptions& opts, std::vector<BatchRow>& rows);

/// Serial reference implementation, kept for testing the kernel.
BatchSummary scan_grid_serial(const ScanOptions& opts, std::vector<BatchRow>& rows);

} // namespace septic
