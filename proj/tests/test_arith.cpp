#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "septic/irreducible.hpp"
#include "septic/newton.hpp"
#include "septic/trinomial.hpp"

using namespace septic;

TEST_CASE("p-adic valuation") {
    CHECK(padic_valuation(12, 2).value() == 2);
    CHECK(padic_valuation(0, 5).is_inf());
    CHECK(padic_valuation(823543, 7).value() == 7);
    CHECK(padic_valuation(Int(-96), 2).value() == 5);
}

TEST_CASE("valuation is additive") {
    std::uint64_t st = 7;
    for (int i = 0; i < 200; ++i) {
        long m = static_cast<long>(splitmix64(st) % 100000) + 1;
        long n = static_cast<long>(splitmix64(st) % 100000) + 1;
        long p = (i % 3 == 0) ? 2 : (i % 3 == 1) ? 3 : 7;
        CHECK(padic_valuation(Int(m) * n, p).value() ==
              padic_valuation(m, p).value() + padic_valuation(n, p).value());
    }
}

TEST_CASE("unit part") {
    CHECK(unit_part(12, 2) == 3);
    CHECK(unit_part(Int(-96), 2) == -3);
    CHECK(unit_part(9, 3) == 1);
    CHECK_THROWS_AS(unit_part(0, 2), UndefinedUnitPart);
    // n = p^v * unit, p coprime to unit
    std::uint64_t st = 11;
    for (int i = 0; i < 100; ++i) {
        Int n = static_cast<long>(splitmix64(st) % 1000000) + 1;
        Int u = unit_part(n, 3);
        Int pv;
        mpz_ui_pow_ui(pv.get_mpz_t(), 3,
                      static_cast<unsigned long>(padic_valuation(n, 3).value()));
        CHECK(n == pv * u);
        CHECK(u % 3 != 0);
    }
}

TEST_CASE("trinomial discriminant") {
    CHECK(Trinomial(0, 1).discriminant() == -823543);
    CHECK(Trinomial(1, 0).discriminant() == -46656);
    // big-integer evaluation of -(6^6 a^7 + 7^7 b^6) for (6,6):
    // 6^7 + 7^7 = 279936 + 823543 = 1103479; times 6^6 = 51483916224
    CHECK(Trinomial(6, 6).discriminant() == Int("-51483916224"));
}

TEST_CASE("discriminant agrees with the resultant route") {
    // disc(F) = -Res(F, F') for monic degree 7
    std::uint64_t st = 3;
    for (int i = 0; i < 40; ++i) {
        long a = static_cast<long>(splitmix64(st) % 2001) - 1000;
        long b = static_cast<long>(splitmix64(st) % 2001) - 1000;
        Trinomial t(a, b);
        PolyZ F = t.poly();
        Int res = resultant(F, F.derivative());
        CHECK(t.discriminant() == -res);
        CHECK(t.discriminant() == poly_discriminant(F));
    }
}

TEST_CASE("resultant basics") {
    PolyZ xm1{-1, 1}, xp1{1, 1};
    CHECK(resultant(xm1, xp1) == 2);
    PolyZ f{3, 1, 2};
    CHECK(resultant(f, f) == 0);
    CHECK_THROWS(resultant(PolyZ(), xp1));
    Trinomial t(6, 6);
    PolyZ F = t.poly();
    CHECK(resultant(F, F.derivative()) == Int("51483916224"));
}

TEST_CASE("charpoly of an element") {
    Trinomial t(5, -3);
    PolyZ F = t.poly();
    // identity generator reproduces F
    CHECK(charpoly_of_element(PolyZ::x(), F) == F);
    // translation: charpoly of alpha + 1 is F(y - 1)
    PolyZ shifted = charpoly_of_element(PolyZ{1, 1}, F);
    CHECK(shifted == F.translate(Int(-1)));
}

TEST_CASE("charpoly matches the resultant interpolation oracle") {
    std::uint64_t st = 5;
    for (int i = 0; i < 12; ++i) {
        long a = static_cast<long>(splitmix64(st) % 41) - 20;
        long b = static_cast<long>(splitmix64(st) % 41) - 20;
        if (b == 0) b = 7;
        PolyZ F = Trinomial(a, b).poly();
        std::vector<Int> gc;
        for (int j = 0; j < 5; ++j) gc.emplace_back(static_cast<long>(splitmix64(st) % 7) - 3);
        PolyZ g(std::move(gc));
        if (g.is_zero()) continue;
        CHECK(charpoly_of_element(g, F) == oracles::charpoly_by_interpolation(g, F));
    }
}

TEST_CASE("charpoly slope arithmetic for a power generator") {
    // F = x^7 + 2^6 x + 2^6: single 2-adic side of slope -6/7, so
    // charpoly(alpha^4) has a single side of slope -24/7
    PolyZ F = Trinomial(64, 64).poly();
    PolyZ chi = charpoly_of_element(PolyZ::monomial(4, 1), F);
    PrincipalPolygon poly = principal_polygon(chi, PolyZ::x(), 2);
    REQUIRE(poly.sides.size() == 1);
    CHECK(poly.sides[0].h == 24);
    CHECK(poly.sides[0].e == 7);
}

TEST_CASE("factorization over F_p: worked shapes") {
    // a odd, b even at p = 2: x (x-1)^2 (x^2+x+1)^2
    PolyModP f2 = PolyModP::from_int_poly(Trinomial(3, 8).poly(), 2);
    auto fac2 = factor_over_Fp(f2);
    REQUIRE(fac2.size() == 3);
    CHECK(fac2[0].factor == PolyModP(2, {0, 1}));
    CHECK(fac2[0].multiplicity == 1);
    CHECK(fac2[1].factor == PolyModP(2, {1, 1}));
    CHECK(fac2[1].multiplicity == 2);
    CHECK(fac2[2].factor == PolyModP(2, {1, 1, 1}));
    CHECK(fac2[2].multiplicity == 2);

    // (a,b) = (2,2) mod 5: (x-1)(x-3)^2 (x^4+2x^3+4x^2+2x+2)
    PolyModP f5 = PolyModP::from_int_poly(Trinomial(2, 2).poly(), 5);
    auto fac5 = factor_over_Fp(f5);
    REQUIRE(fac5.size() == 3);
    CHECK(fac5[0].factor == PolyModP(5, {-3, 1})); // x - 3 sorts first (constant 2)
    CHECK(fac5[0].multiplicity == 2);
    CHECK(fac5[1].factor == PolyModP(5, {-1, 1}));
    CHECK(fac5[1].multiplicity == 1);
    CHECK(fac5[2].factor == PolyModP(5, {2, 2, 4, 2, 1}));
    CHECK(fac5[2].multiplicity == 1);

    // (a,b) = (1,3) mod 5: (x-1)(x^6+x^5+x^4+x^3+x^2+x+2)
    PolyModP g5 = PolyModP::from_int_poly(Trinomial(1, 3).poly(), 5);
    auto gac5 = factor_over_Fp(g5);
    REQUIRE(gac5.size() == 2);
    CHECK(gac5[0].factor == PolyModP(5, {-1, 1}));
    CHECK(gac5[1].factor == PolyModP(5, {2, 1, 1, 1, 1, 1, 1}));
}

TEST_CASE("factorization matches the trial-division oracle") {
    std::uint64_t st = 17;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        for (int i = 0; i < 25; ++i) {
            std::vector<long> c(8, 0);
            for (auto& v : c) v = static_cast<long>(splitmix64(st) % static_cast<unsigned long>(p));
            c[7] = 1;
            PolyModP f(p, c);
            auto mine = factor_over_Fp(f);
            std::multimap<std::vector<long>, int> got;
            PolyModP product = PolyModP::constant(p, 1);
            for (auto& fk : mine) {
                got.emplace(fk.factor.coeffs(), fk.multiplicity);
                for (int m = 0; m < fk.multiplicity; ++m) product = product * fk.factor;
                CHECK(is_irreducible_mod_p(fk.factor));
            }
            CHECK(product == f.monic());
            CHECK(got == oracles::oracle_factor_fp(f));
        }
    }
}

TEST_CASE("irreducibility over Q") {
    CHECK(is_irreducible_over_Q(Trinomial(6, 6).poly()));       // Eisenstein at 2 and 3
    CHECK_FALSE(is_irreducible_over_Q(Trinomial(2, 3).poly())); // root -1
    CHECK(is_irreducible_over_Q(Trinomial(28, 32).poly()));     // irreducible mod 5
    // quadratic times quintic, no rational root: x^2+x+2 divides x^7-7x-10
    CHECK_FALSE(is_irreducible_over_Q(Trinomial(-7, -10).poly()));
    PolyZ quad{2, 1, 1}, rem;
    Trinomial(-7, -10).poly().divrem_monic(quad, rem);
    CHECK(rem.is_zero());
    // mod-p certificate consistency: a single factor of multiplicity 1
    PolyModP f5 = PolyModP::from_int_poly(Trinomial(28, 32).poly(), 5);
    auto fac = factor_over_Fp(f5);
    CHECK(fac.size() == 1);
    CHECK(fac[0].multiplicity == 1);
}

TEST_CASE("standing hypothesis rejection") {
    // nu_2(a) = 6 and nu_2(b) = 7
    Trinomial bad(64, 128);
    CHECK_THROWS_AS(bad.require_standing_hypothesis(), HypothesisViolation);
    Trinomial good(64, 64);
    CHECK_NOTHROW(good.require_standing_hypothesis());
}

TEST_CASE("residual field arithmetic") {
    // F_4 = F_2[x]/(x^2+x+1): (x+1) is the inverse of x
    ResidualField f4(2, PolyModP(2, {1, 1, 1}));
    FqElem x = f4.generator();
    FqElem xinv = x.inverse();
    CHECK(x * xinv == f4.one());
    CHECK(xinv == f4.reduce(PolyModP(2, {1, 1})));
    // y^2 + y + 1 splits over F_4 as (y - x)(y - x^2)
    FqPoly R(&f4, {f4.one(), f4.one(), f4.one()});
    auto fac = factor_over_Fq(R);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].factor.degree() == 1);
    CHECK(fac[1].factor.degree() == 1);
    // but y^2 + (x+1)^{-1} y + 1 has no roots in F_4
    FqPoly S(&f4, {f4.one(), (f4.one() + x).inverse(), f4.one()});
    auto fac2 = factor_over_Fq(S);
    REQUIRE(fac2.size() == 1);
    CHECK(fac2[0].factor.degree() == 2);
    CHECK_THROWS_AS(ResidualField(2, PolyModP(2, {1, 0, 1, 1, 1})), Unsupported); // degree 4
}

TEST_CASE("Fq factorization recombines") {
    ResidualField f9(3, PolyModP(3, {1, 0, 1})); // F_9 = F_3[x]/(x^2+1)
    std::uint64_t st = 23;
    for (int i = 0; i < 20; ++i) {
        std::vector<FqElem> c;
        for (int j = 0; j < 6; ++j)
            c.push_back(f9.reduce(PolyModP(3, {static_cast<long>(splitmix64(st) % 3),
                                               static_cast<long>(splitmix64(st) % 3)})));
        c.push_back(f9.one());
        FqPoly f(&f9, std::move(c));
        FqPoly prod = FqPoly::constant(&f9, f9.one());
        for (auto& fk : factor_over_Fq(f))
            for (int m = 0; m < fk.multiplicity; ++m) prod = prod * fk.factor;
        CHECK(prod == f);
    }
}

TEST_CASE("count of monic irreducibles by enumeration") {
    for (long p : {2L, 3L, 5L})
        for (int d = 1; d <= 3; ++d)
            CHECK(static_cast<long>(monic_irreducibles(p, d).size()) ==
                  (d == 1 ? p : d == 2 ? (p * p - p) / 2 : (p * p * p - p) / 3));
}
