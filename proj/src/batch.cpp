#include "septic/batch.hpp"

#include <omp.h>

namespace septic {

namespace {

void run_one(long a, long b, const ScanOptions& opts, BatchRow& row,
             long& irreducible, long& discrepancies, long& unsupported,
             std::vector<std::string>& findings) {
    Trinomial t(a, b);
    try {
        row.report = build_report(t);
    } catch (const Error& e) {
        row.report.a = a;
        row.report.b = b;
        row.report.irreducible = false;
        findings.push_back(std::string("error at (") + std::to_string(a) + "," +
                           std::to_string(b) + "): " + e.what());
        ++discrepancies;
        return;
    }
    if (!row.report.irreducible) return;
    ++irreducible;
    discrepancies += static_cast<long>(row.report.discrepancies.size());
    for (auto& d : row.report.discrepancies)
        findings.push_back("(" + std::to_string(a) + "," + std::to_string(b) + "): " + d);
    for (const auto& ev : row.report.primes) unsupported += static_cast<long>(ev.unresolved.size());

    if (opts.run_checks) {
        // Corollary: i(K) lands in the fixed value set (field_index throws otherwise,
        // which build_report would surface); cross-check nu against evidence once more
        static const long allowed[] = {1, 2, 3, 6, 8, 9, 18, 24, 72};
        bool ok = false;
        for (long v : allowed) ok = ok || v == row.report.field_index;
        if (!ok) {
            ++discrepancies;
            findings.push_back("(" + std::to_string(a) + "," + std::to_string(b) +
                               "): field index outside the corollary set");
        }
        if (opts.scan_budget > 0) {
            for (long p : {2L, 3L}) {
                ScanResult sr = generator_scan_serial(t, p, opts.scan_budget, opts.seed);
                if (sr.best_disc_valuation >= 0 &&
                    (sr.best_disc_valuation - sr.disc_valuation_of_F) % 2 != 0) {
                    ++discrepancies;
                    findings.push_back("(" + std::to_string(a) + "," + std::to_string(b) +
                                       "): scan parity broken at p=" + std::to_string(p));
                }
            }
        }
    }
}

BatchSummary scan_grid_impl(const ScanOptions& opts, std::vector<BatchRow>& rows, bool parallel) {
    long na = opts.a_hi - opts.a_lo + 1;
    long nb = opts.b_hi - opts.b_lo + 1;
    if (na <= 0 || nb <= 0) throw Error("scan_grid: empty range");
    long total = na * nb;
    rows.assign(static_cast<size_t>(total), BatchRow{});

    BatchSummary summary;
    summary.pairs = total;
    long irreducible = 0, discrepancies = 0, unsupported = 0;
    std::vector<std::string> findings;

#pragma omp parallel for schedule(dynamic, 4) reduction(+ : irreducible, discrepancies, unsupported) if (parallel)
    for (long k = 0; k < total; ++k) {
        long a = opts.a_lo + k / nb;
        long b = opts.b_lo + k % nb;
        long irr = 0, disc = 0, uns = 0;
        std::vector<std::string> local;
        run_one(a, b, opts, rows[static_cast<size_t>(k)], irr, disc, uns, local);
        irreducible += irr;
        discrepancies += disc;
        unsupported += uns;
        if (!local.empty()) {
#pragma omp critical(septic_batch_findings)
            findings.insert(findings.end(), local.begin(), local.end());
        }
    }

    summary.irreducible = irreducible;
    summary.discrepancies = discrepancies;
    summary.unsupported = unsupported;
    std::sort(findings.begin(), findings.end());
    summary.findings = std::move(findings);
    return summary;
}

} // namespace

BatchSummary scan_grid(const ScanOptions& opts, std::vector<BatchRow>& rows) {
    return scan_grid_impl(opts, rows, true);
}

BatchSummary scan_grid_serial(const ScanOptions& opts, std::vector<BatchRow>& rows) {
    return scan_grid_impl(opts, rows, false);
}

} // namespace septic
