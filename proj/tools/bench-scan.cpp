// Benchmark: OpenMP scan kernels against their serial reference.
#include <chrono>
#include <iostream>

#include <omp.h>

#include "septic/batch.hpp"
#include "septic/scan.hpp"

using namespace septic;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    long budget = argc > 1 ? std::atol(argv[1]) : 2000;
    std::cout << "threads available: " << omp_get_max_threads() << "\n\n";

    std::cout << "generator scan, budget " << budget << ", (a,b) = (803, 2112):\n";
    Trinomial t(803, 2112);
    for (long p : {2L, 3L}) {
        auto t0 = Clock::now();
        ScanResult serial = generator_scan_serial(t, p, budget, 1);
        double serial_ms = ms_since(t0);
        t0 = Clock::now();
        ScanResult parallel = generator_scan(t, p, budget, 1);
        double omp_ms = ms_since(t0);
        bool same = serial.best_disc_valuation == parallel.best_disc_valuation &&
                    serial.witness == parallel.witness;
        std::cout << "  p=" << p << "  serial " << serial_ms << " ms,  omp " << omp_ms
                  << " ms,  speedup x" << serial_ms / omp_ms
                  << (same ? "  (identical results)" : "  MISMATCH") << "\n";
    }

    std::cout << "\ngrid scan, a,b in [1,40]^2 with checks:\n";
    ScanOptions opts;
    opts.a_lo = opts.b_lo = 1;
    opts.a_hi = opts.b_hi = 40;
    opts.run_checks = true;
    std::vector<BatchRow> r1, r2;
    auto t0 = Clock::now();
    BatchSummary s1 = scan_grid_serial(opts, r1);
    double serial_ms = ms_since(t0);
    t0 = Clock::now();
    BatchSummary s2 = scan_grid(opts, r2);
    double omp_ms = ms_since(t0);
    bool same = r1.size() == r2.size() && s1.irreducible == s2.irreducible &&
                s1.discrepancies == s2.discrepancies;
    for (size_t i = 0; same && i < r1.size(); ++i)
        same = r1[i].report.to_json() == r2[i].report.to_json();
    std::cout << "  serial " << serial_ms << " ms,  omp " << omp_ms << " ms,  speedup x"
              << serial_ms / omp_ms << (same ? "  (identical results)" : "  MISMATCH") << "\n";
    return same ? 0 : 1;
}
