#include "septic/scan.hpp"

#include <omp.h>

#include "septic/poly.hpp"

namespace septic {

namespace {

// sample index -> coefficient tuple in [-3,3]^7; index 0 is alpha itself
std::array<long, 7> sample_coeffs(long index, unsigned long seed) {
    std::array<long, 7> c{};
    if (index == 0) {
        c[1] = 1;
        return c;
    }
    std::uint64_t state = seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(index);
    bool nonconst = false;
    do {
        for (int i = 0; i < 7; ++i) {
            c[static_cast<size_t>(i)] = static_cast<long>(splitmix64(state) % 7) - 3;
            if (i >= 1 && c[static_cast<size_t>(i)] != 0) nonconst = true;
        }
    } while (!nonconst);
    return c;
}

struct Best {
    long val = -1;
    long index = -1;
    std::array<long, 7> coeffs{};
};

void consider(Best& b, long val, long index, const std::array<long, 7>& c) {
    if (val < 0) return;
    if (b.val < 0 || val < b.val || (val == b.val && index < b.index)) {
        b.val = val;
        b.index = index;
        b.coeffs = c;
    }
}

long theta_disc_valuation(const PolyZ& F, const std::array<long, 7>& c, long p) {
    std::vector<Int> gc;
    gc.reserve(7);
    for (long v : c) gc.emplace_back(v);
    PolyZ g(std::move(gc));
    PolyZ chi = charpoly_of_element(g, F);
    Int disc = poly_discriminant(chi);
    if (disc == 0) return -1; // theta does not generate; skip
    return padic_valuation(disc, p).value();
}

ScanResult finish(const Trinomial& t, long p, long budget, const Best& best,
                  std::optional<long> dK_valuation) {
    ScanResult out;
    out.samples_used = budget;
    out.best_disc_valuation = best.val;
    out.witness = best.coeffs;
    out.disc_valuation_of_F = padic_valuation(t.discriminant(), p).value();
    if (best.val >= 0) {
        out.relative_index_bound = (best.val - out.disc_valuation_of_F) / 2;
        if (dK_valuation) out.absolute_upper_bound = (best.val - *dK_valuation) / 2;
    }
    return out;
}

} // namespace

ScanResult generator_scan_serial(const Trinomial& t, long p, long budget, unsigned long seed,
                                 std::optional<long> dK_valuation) {
    PolyZ F = t.poly();
    Best best;
    for (long i = 0; i < budget; ++i) {
        auto c = sample_coeffs(i, seed);
        consider(best, theta_disc_valuation(F, c, p), i, c);
    }
    return finish(t, p, budget, best, dK_valuation);
}

ScanResult generator_scan(const Trinomial& t, long p, long budget, unsigned long seed,
                          std::optional<long> dK_valuation) {
    PolyZ F = t.poly();
    Best best;
#pragma omp parallel
    {
        Best local;
#pragma omp for schedule(dynamic, 16) nowait
        for (long i = 0; i < budget; ++i) {
            auto c = sample_coeffs(i, seed);
            consider(local, theta_disc_valuation(F, c, p), i, c);
        }
#pragma omp critical(septic_scan_reduce)
        {
            if (local.val >= 0) consider(best, local.val, local.index, local.coeffs);
        }
    }
    return finish(t, p, budget, best, dK_valuation);
}

bool scan_parity_holds(const Trinomial& t, long p, long budget, unsigned long seed) {
    PolyZ F = t.poly();
    long base = padic_valuation(t.discriminant(), p).value();
    bool ok = true;
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : ok)
    for (long i = 0; i < budget; ++i) {
        auto c = sample_coeffs(i, seed);
        long v = theta_disc_valuation(F, c, p);
        if (v >= 0 && (v - base) % 2 != 0) ok = false;
    }
    return ok;
}

} // namespace septic
