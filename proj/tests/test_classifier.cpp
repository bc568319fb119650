#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "septic/assemble.hpp"
#include "septic/dedekind.hpp"
#include "septic/irreducible.hpp"

using namespace septic;

TEST_CASE("integral closedness verdicts") {
    ClosednessVerdict v1 = integral_closed(Trinomial(6, 6));
    CHECK(v1.closed);
    CHECK(v1.violated.empty());

    ClosednessVerdict v2 = integral_closed(Trinomial(28, 32));
    CHECK_FALSE(v2.closed);
    CHECK(std::count(v2.violated.begin(), v2.violated.end(), 1) == 1); // nu2(32) = 5

    ClosednessVerdict v3 = integral_closed(Trinomial(3, 8));
    CHECK_FALSE(v3.closed);
    CHECK(v3.violated == std::vector<int>{2});

    CHECK_THROWS_AS(integral_closed(Trinomial(2, 3)), ReducibleInput);
}

TEST_CASE("closedness agrees with Dedekind per candidate prime") {
    std::uint64_t st = 41;
    int done = 0;
    while (done < 120) {
        long a = static_cast<long>(splitmix64(st) % 401) - 200;
        long b = static_cast<long>(splitmix64(st) % 401) - 200;
        Trinomial t(a, b);
        if (b == 0 || !is_irreducible_over_Q(t.poly())) continue;
        ++done;
        Int delta = t.discriminant();
        for (long p : primes_up_to(100)) {
            if (padic_valuation(delta, p).value() < 2) continue;
            CHECK(closed_at_prime(t, p) == !dedekind_divides_index(t.poly(), p));
        }
    }
}

TEST_CASE("nu2 table") {
    CHECK(nu2_index(Trinomial(28, 32)) == 1);
    CHECK(nu2_index(Trinomial(3, 8)) == 3);
    CHECK(nu2_index(Trinomial(6, 6)) == 0);
    CHECK(nu2_index(Trinomial(112, 128)) == 1);
    CHECK(nu2_index(Trinomial(3, 12)) == 1); // a=3(8), b=4(8)
    // row with the even-discriminant condition: a=1(8), b=2(4)
    // engine cross-check happens in the acceptance suite
    CHECK(nu2_index(Trinomial(-1, 9)) == 0);
}

TEST_CASE("nu3 table") {
    CHECK(nu3_index(Trinomial(-1, 9)) == 2);
    CHECK(nu3_index(Trinomial(803, 2112)) == 1);
    CHECK(nu3_index(Trinomial(6, 6)) == 0);
    CHECK(nu3_index(Trinomial(35, 72)) == 2);
    // corrective deep row a = 27 (243), b = 0 (729): four degree-1 primes
    CHECK(nu3_index(Trinomial(270, 729)) == 1);
    CHECK(field_index(Trinomial(270, 729)).field_index == 3);
    // neighbouring classes keep the published values
    CHECK(nu3_index(Trinomial(270, 243)) == 0);
    CHECK(nu3_index(Trinomial(216, 729)) == 0);
}

TEST_CASE("nup is trivial for p >= 5") {
    CHECK(nup_index(Trinomial(6, 6), 5, true) == 0);
    CHECK(nup_index(Trinomial(28, 32), 7, true) == 0);
    CHECK(nup_index(Trinomial(803, 2112), 11, true) == 0);
}

TEST_CASE("field index assembles the golden values") {
    struct Golden { long a, b, idx; };
    for (Golden g : {Golden{6, 6, 1}, {28, 32, 2}, {3, 8, 8}, {-1, 9, 9},
                     {803, 2112, 24}, {35, 72, 72}}) {
        IndexReport r = field_index(Trinomial(g.a, g.b));
        CHECK(r.field_index == g.idx);
        CHECK(r.nup_nontrivial.empty());
        CHECK(r.monogenic_obstruction == (g.idx > 1));
    }
}

TEST_CASE("field index monotone against closedness") {
    std::uint64_t st = 43;
    int done = 0;
    while (done < 60) {
        long a = static_cast<long>(splitmix64(st) % 801) - 400;
        long b = static_cast<long>(splitmix64(st) % 801) - 400;
        Trinomial t(a, b);
        if (b == 0 || !is_irreducible_over_Q(t.poly())) continue;
        ++done;
        IndexReport r = field_index(t);
        if (r.field_index > 1) CHECK_FALSE(integral_closed(t).closed);
    }
}

TEST_CASE("table rows are disjoint across representative sweeps") {
    // nu2 on all residues mod 2^7 scaled up, nu3 mod 3^5: TableAmbiguity never fires
    for (long a = 0; a < 128; ++a) {
        for (long b = 0; b < 128; ++b) {
            Trinomial t(2048 + a, 1920 + b); // fixed offsets, all residues mod 2^7
            try {
                t.require_standing_hypothesis();
                if (!is_irreducible_over_Q(t.poly())) continue;
            } catch (const HypothesisViolation&) {
                continue; // rejected upstream by design
            }
            CHECK_NOTHROW(nu2_index(t));
        }
    }
    for (long a = 0; a < 243; a += 2) {
        for (long b = 0; b < 243; b += 3) {
            Trinomial t(a, b == 0 ? 243 : b);
            if (!is_irreducible_over_Q(t.poly())) continue;
            CHECK_NOTHROW(nu3_index(t));
        }
    }
}

TEST_CASE("row six of the nu2 table matches the engine") {
    // the published row lists (5,2) mod 16; the computation supports (5,10)
    OreResult r52 = ore_factorization(Trinomial(5, 2).poly(), 2);
    CHECK_FALSE(is_common_index_divisor(r52.type, 2));
    CHECK(nu2_index(Trinomial(5, 2)) == 0);

    OreResult r510 = ore_factorization(Trinomial(5, 10).poly(), 2);
    CHECK(is_common_index_divisor(r510.type, 2));
    CHECK(nu2_index(Trinomial(5, 10)) == 1);

    for (long k = 0; k < 8; ++k) {
        Trinomial t52(5 + 16 * k, 2 + 16 * (k + 3));
        if (!is_irreducible_over_Q(t52.poly())) continue;
        OreResult r = ore_factorization(t52.poly(), 2);
        if (r.complete) CHECK_FALSE(is_common_index_divisor(r.type, 2));
    }
}

TEST_CASE("monogenic family certificates") {
    // u = v = 6: theta = alpha^6 / 2^5
    MonogenicCertificate c1 = monogenic_family_certificate({6, 6, 1, 1});
    CHECK(c1.status == MonogenicCertificate::Status::Success);
    CHECK(c1.x == 6);
    CHECK(c1.y == 5);
    CHECK(c1.g_integer);
    CHECK(c1.g_eisenstein_at_2);
    CHECK(c1.ind_alpha_lower >= 1);
    CHECK(is_irreducible_over_Q(c1.generator_charpoly));

    // u = v = 3: theta = alpha^5 / 2^2
    MonogenicCertificate c2 = monogenic_family_certificate({3, 3, 1, 1});
    CHECK(c2.status == MonogenicCertificate::Status::Success);
    CHECK(c2.x == 5);
    CHECK(c2.y == 2);
    CHECK(c2.g_eisenstein_at_2);

    // (u,v) = (1,2) satisfies u >= v-1 yet the polygon has two sides
    MonogenicCertificate c3 = monogenic_family_certificate({1, 2, 1, 1});
    CHECK(c3.status == MonogenicCertificate::Status::Discrepancy);

    // hypothesis violations are named
    CHECK_THROWS_WITH_AS(monogenic_family_certificate({6, 6, 7, 1}),
                         doctest::Contains("7"), Error);
    CHECK_THROWS_AS(monogenic_family_certificate({6, 6, 1, 3}), Error); // gcd(6,b) != 1
}

TEST_CASE("assemble_nu carries a consistent evidence trail") {
    for (auto [a, b] : {std::pair<long, long>{6, 6}, {28, 32}, {3, 8}, {-1, 9},
                        {803, 2112}, {35, 72}, {5, 10}, {5, 2}}) {
        Trinomial t(a, b);
        for (long p : {2L, 3L, 5L}) {
            NuEvidence ev = assemble_nu(t, p);
            REQUIRE(ev.engine_complete);
            CHECK(*ev.common_divisor == (ev.value >= 1));
            if (ev.engstrom_value) CHECK(*ev.engstrom_value == ev.value);
        }
    }
}
