#include "septic/engstrom.hpp"

#include <algorithm>

namespace septic {

namespace {

long ipow(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

int moebius(int n) {
    int m = 1;
    for (int p = 2; p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    return m;
}

} // namespace

long count_monic_irreducibles(long p, int f) {
    if (f < 1 || f > 7) throw Error("count_monic_irreducibles: 1 <= f <= 7");
    long sum = 0;
    for (int d = 1; d <= f; ++d) {
        if (f % d != 0) continue;
        sum += moebius(d) * ipow(p, f / d);
    }
    return sum / f;
}

bool is_common_index_divisor(const SplittingType& type, long p) {
    if (type.degree_sum() != 7) throw Error("splitting type must sum to 7");
    for (int f = 1; f <= 7; ++f)
        if (type.primes_with_f(f) > count_monic_irreducibles(p, f)) return true;
    return false;
}

long engstrom_nu(const EngstromKey& key) {
    if (!is_common_index_divisor(key.type, key.p)) return 0;

    // entries established for degree 7; matched on the residue-degree profile
    struct Entry {
        long p;
        std::vector<int> f_profile;
        long nu;
    };
    static const std::vector<Entry> entries = {
        {2, {1, 1, 1}, 1},          // e.g. one unramified point and two cubically ramified
        {2, {1, 2, 2}, 1},
        {2, {1, 1, 1, 2}, 1},
        {2, {1, 1, 1, 4}, 1},
        {2, {1, 2, 2, 2}, 3},
        {2, {1, 1, 1, 2, 2}, 3},
        {3, {1, 1, 1, 1}, 1},
        {3, {1, 1, 1, 1, 1}, 2},
    };

    auto profile = key.type.f_profile();
    for (const auto& e : entries)
        if (e.p == key.p && e.f_profile == profile) return e.nu;

    throw NotTabulated("no table entry for p=" + std::to_string(key.p) + " type " + key.type.str());
}

long tame_dK_valuation(const SplittingType& type, long p) {
    long sum = 0;
    for (auto& [e, f] : type.factors) {
        if (e % p == 0)
            throw WildRamification("p=" + std::to_string(p) + " divides e=" + std::to_string(e));
        sum += static_cast<long>(e - 1) * f;
    }
    return sum;
}

} // namespace septic
