#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "septic/batch.hpp"
#include "septic/engstrom.hpp"
#include "septic/irreducible.hpp"

using namespace septic;

namespace {

SplittingType make_type(std::vector<std::pair<int, int>> fac) {
    SplittingType t;
    for (auto& [e, f] : fac) t.add(e, f);
    return t;
}

} // namespace

TEST_CASE("monic irreducible counts") {
    CHECK(count_monic_irreducibles(2, 1) == 2);
    CHECK(count_monic_irreducibles(2, 2) == 1);
    CHECK(count_monic_irreducibles(3, 2) == 3);
    CHECK(count_monic_irreducibles(2, 7) == 18);
    for (long p : {2L, 3L, 5L})
        for (int f = 1; f <= 3; ++f)
            CHECK(count_monic_irreducibles(p, f) ==
                  static_cast<long>(monic_irreducibles(p, f).size()));
}

TEST_CASE("common index divisor criterion") {
    CHECK(is_common_index_divisor(make_type({{1, 1}, {3, 1}, {3, 1}}), 2));
    CHECK_FALSE(is_common_index_divisor(make_type({{1, 1}, {2, 1}, {2, 2}}), 2));
    CHECK(is_common_index_divisor(make_type({{1, 1}, {1, 1}, {2, 1}, {3, 1}}), 3));
    CHECK_FALSE(is_common_index_divisor(make_type({{1, 1}, {3, 1}, {3, 1}}), 3));
    CHECK_FALSE(is_common_index_divisor(make_type({{7, 1}}), 2));
}

TEST_CASE("engstrom table") {
    CHECK(engstrom_nu({2, make_type({{1, 1}, {3, 1}, {3, 1}})}) == 1);
    CHECK(engstrom_nu({3, make_type({{1, 1}, {1, 1}, {1, 1}, {2, 1}, {2, 1}})}) == 2);
    CHECK(engstrom_nu({2, make_type({{7, 1}})}) == 0);
    CHECK(engstrom_nu({2, make_type({{1, 1}, {1, 2}, {1, 2}, {1, 2}})}) == 3);
    CHECK(engstrom_nu({2, make_type({{1, 1}, {1, 1}, {1, 1}, {1, 2}, {1, 2}})}) == 3);
    CHECK(engstrom_nu({3, make_type({{1, 1}, {1, 1}, {2, 1}, {3, 1}})}) == 1);
    // a divisor type outside the table
    CHECK_THROWS_AS(engstrom_nu({2, make_type({{1, 1}, {1, 1}, {1, 1}, {2, 1}, {1, 2}})}),
                    NotTabulated);
    // entries are positive exactly on common index divisors
    CHECK(engstrom_nu({5, make_type({{1, 1}, {1, 1}, {5, 1}})}) == 0);
}

TEST_CASE("tame different values") {
    CHECK(tame_dK_valuation(make_type({{7, 1}}), 2) == 6);
    // sum (e-1) f = 4 for {(1,1),(1,1),(5,1)} at any p coprime to 5
    CHECK(tame_dK_valuation(make_type({{1, 1}, {1, 1}, {5, 1}}), 3) == 4);
    // the same type at p = 5 is wildly ramified
    CHECK_THROWS_AS(tame_dK_valuation(make_type({{1, 1}, {1, 1}, {5, 1}}), 5), WildRamification);
    CHECK_THROWS_AS(tame_dK_valuation(make_type({{3, 1}, {1, 4}}), 3), WildRamification);
}

TEST_CASE("generator scan: basic bounds") {
    // (6,6) at p=2 is tame {(7,1)}: alpha itself achieves nu2(disc) = 6 = nu2(d_K)
    Trinomial t(6, 6);
    ScanResult r = generator_scan(t, 2, 64, 1, 6);
    CHECK(r.best_disc_valuation == 6);
    CHECK(r.relative_index_bound == 0);
    REQUIRE(r.absolute_upper_bound.has_value());
    CHECK(*r.absolute_upper_bound == 0);
    // alpha is sample 0
    std::array<long, 7> alpha{};
    alpha[1] = 1;
    CHECK(r.witness == alpha);
}

TEST_CASE("scan parity invariant") {
    for (auto [a, b] : {std::pair<long, long>{6, 6}, {3, 8}, {803, 2112}}) {
        CHECK(scan_parity_holds(Trinomial(a, b), 2, 200, 1));
        CHECK(scan_parity_holds(Trinomial(a, b), 3, 200, 1));
    }
}

TEST_CASE("parallel scan equals the serial reference") {
    Trinomial t(35, 72);
    for (long p : {2L, 3L}) {
        ScanResult serial = generator_scan_serial(t, p, 300, 9);
        ScanResult parallel = generator_scan(t, p, 300, 9);
        CHECK(serial.best_disc_valuation == parallel.best_disc_valuation);
        CHECK(serial.witness == parallel.witness);
        CHECK(serial.relative_index_bound == parallel.relative_index_bound);
    }
}

TEST_CASE("report JSON round trip is byte-identical") {
    for (auto [a, b] : {std::pair<long, long>{35, 72}, {6, 6}, {5, 10}}) {
        ReportDocument doc = build_report(Trinomial(a, b));
        std::string once = doc.to_json();
        auto parsed = nlohmann::ordered_json::parse(once);
        CHECK(parsed.dump() == once);
    }
}

TEST_CASE("csv rows") {
    ReportDocument doc = build_report(Trinomial(3, 8));
    CHECK(ReportDocument::csv_header() == "a,b,irreducible,nu2,nu3,field_index,closed,discrepancy_flags");
    CHECK(doc.to_csv_row() == "3,8,1,3,0,8,0,0");
}

TEST_CASE("grid scan is deterministic and matches serial") {
    ScanOptions opts;
    opts.a_lo = 1;
    opts.a_hi = 12;
    opts.b_lo = 1;
    opts.b_hi = 12;
    opts.run_checks = true;
    std::vector<BatchRow> r1, r2;
    BatchSummary s1 = scan_grid_serial(opts, r1);
    BatchSummary s2 = scan_grid(opts, r2);
    CHECK(s1.pairs == s2.pairs);
    CHECK(s1.irreducible == s2.irreducible);
    CHECK(s1.discrepancies == 0);
    CHECK(s2.discrepancies == 0);
    REQUIRE(r1.size() == r2.size());
    for (size_t i = 0; i < r1.size(); ++i)
        CHECK(r1[i].report.to_json() == r2[i].report.to_json());
}

TEST_CASE("empty-ish ranges") {
    ScanOptions opts;
    opts.a_lo = opts.a_hi = 0;
    opts.b_lo = opts.b_hi = 0;
    std::vector<BatchRow> rows;
    BatchSummary s = scan_grid(opts, rows);
    CHECK(s.pairs == 1);
    CHECK(s.irreducible == 0); // x^7 is reducible
}
