#pragma once

#include <array>
#include <optional>

#include "septic/trinomial.hpp"

namespace septic {

/// Result of sampling generators theta = c0 + c1 a + ... + c6 a^6 and taking
/// the minimum of nu_p(disc(charpoly theta)) over squarefree charpolys.
struct ScanResult {
    long best_disc_valuation = -1;             // -1: no squarefree sample seen
    std::array<long, 7> witness{};             // coefficients of the best theta
    long samples_used = 0;
    long disc_valuation_of_F = 0;
    /// (nu_p(disc g_theta) - nu_p(disc F)) / 2, i.e. the best improvement of
    /// theta over alpha; always >= -nu_p(ind alpha).
    long relative_index_bound = 0;
    /// (best - nu_p(d_K)) / 2 when nu_p(d_K) is known (tame types).
    std::optional<long> absolute_upper_bound;
};

/// OpenMP kernel; deterministic for fixed (budget, seed) regardless of the
/// schedule (associative min-reduction with index tie-breaking).
ScanResult generator_scan(const Trinomial& t, long p, long budget, unsigned long seed,
                          std::optional<long> dK_valuation = std::nullopt);

/// Serial reference implementation, kept for testing the kernel.
ScanResult generator_scan_serial(const Trinomial& t, long p, long budget, unsigned long seed,
                                 std::optional<long> dK_valuation = std::nullopt);

/// Parity invariant: nu_p(disc g_theta) - nu_p(disc F) is even for every
/// squarefree sample. Exposed for the test suites.
bool scan_parity_holds(const Trinomial& t, long p, long budget, unsigned long seed);

} // namespace septic
