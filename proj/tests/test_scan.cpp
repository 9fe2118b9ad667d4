#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "caliber/scan.hpp"

using caliber::i64;
using caliber::ScanOptions;
using caliber::ScanRecord;
using caliber::Verdict;

namespace {

std::vector<ScanRecord> scan(ScanOptions opt) { return caliber::scan_range(opt); }

ScanOptions range(i64 lo, i64 hi) {
    ScanOptions o;
    o.lo = lo;
    o.hi = hi;
    return o;
}

}  // namespace

TEST_CASE("a plain window yields one record per square-free d") {
    auto recs = scan(range(2, 50));
    CHECK(recs.size() == 30);
    std::vector<i64> ds;
    for (const auto& r : recs) ds.push_back(r.d);
    REQUIRE(std::is_sorted(ds.begin(), ds.end()));
    for (i64 d = 2; d <= 50; ++d)
        REQUIRE(std::binary_search(ds.begin(), ds.end(), d) == caliber::is_square_free(d));
}

TEST_CASE("scanned records equal the from-scratch single_record route") {
    auto recs = scan(range(2, 400));
    size_t i = 0;
    for (i64 d = 2; d <= 400; ++d) {
        if (!caliber::is_square_free(d)) continue;
        REQUIRE(i < recs.size());
        INFO("d=" << d);
        REQUIRE(recs[i] == caliber::single_record(d));
        ++i;
    }
    REQUIRE(i == recs.size());
}

TEST_CASE("worked record contents") {
    auto rec = caliber::single_record(13);
    CHECK(rec.D == 13);
    CHECK(rec.kappa == 1);
    CHECK(rec.h == 1);
    CHECK(rec.cycle_sizes == std::vector<i64>{1});
    CHECK(rec.forms == std::vector<caliber::QuadForm>{{1, -3, -1}});
    CHECK(rec.smallest_split_prime.value() == 3);
    CHECK(rec.rd.value().n == 3);
    CHECK(rec.rd.value().r == 4);
    CHECK(rec.family.tag() == "n2p4");
    CHECK(rec.sandwich == Verdict::Pass);
    CHECK(rec.lowerbound == Verdict::Pass);
    CHECK(rec.pow2 == Verdict::Vacuous);
    CHECK(rec.prop31 == Verdict::Pass);
    CHECK(rec.prop36 == Verdict::Vacuous);
    CHECK_FALSE(rec.anomaly);

    auto rec10 = caliber::single_record(10);
    CHECK(rec10.D == 40);
    CHECK(rec10.kappa == 4);
    CHECK(rec10.h == 2);
    CHECK(rec10.cycle_sizes == std::vector<i64>{1, 3});
    CHECK(rec10.smallest_split_prime.value() == 3);
    CHECK_FALSE(rec10.anomaly);

    auto rec2 = caliber::single_record(2);
    CHECK_FALSE(rec2.smallest_split_prime.has_value());  // 7 splits but exceeds sqrt(8)
    CHECK_FALSE(rec2.anomaly);                           // excused by the exception list

    CHECK(caliber::single_record(5).anomaly);  // caliber equals 1 off the frozen list
    CHECK(caliber::single_record(3).anomaly);  // prime with no split prime below sqrt(D)
    CHECK_FALSE(caliber::single_record(46).rd.has_value());
}

TEST_CASE("filters agree with post-filtering the plain scan") {
    auto plain = scan(range(2, 3000));

    auto kappa1 = scan([&] {
        auto o = range(2, 3000);
        o.kappa = 1;
        return o;
    }());
    std::vector<ScanRecord> expect;
    for (const auto& r : plain)
        if (r.kappa == 1) expect.push_back(r);
    REQUIRE(kappa1 == expect);

    auto h1 = scan([&] {
        auto o = range(2, 3000);
        o.class_count = 1;
        return o;
    }());
    expect.clear();
    for (const auto& r : plain)
        if (r.h == 1) expect.push_back(r);
    REQUIRE(h1 == expect);

    auto mod3 = scan([&] {
        auto o = range(2, 3000);
        o.mod8 = 3;
        return o;
    }());
    expect.clear();
    for (const auto& r : plain)
        if (r.d % 8 == 3) expect.push_back(r);
    REQUIRE(mod3 == expect);

    auto not5 = scan([&] {
        auto o = range(2, 3000);
        o.mod8_not5 = true;
        return o;
    }());
    expect.clear();
    for (const auto& r : plain)
        if (r.d % 8 != 5) expect.push_back(r);
    REQUIRE(not5 == expect);

    auto fam = scan([&] {
        auto o = range(2, 3000);
        o.family = "n2p4";
        return o;
    }());
    expect.clear();
    for (const auto& r : plain)
        if (r.family.n2p4) expect.push_back(r);
    REQUIRE(fam == expect);

    auto none = scan([&] {
        auto o = range(2, 3000);
        o.family = "none";
        return o;
    }());
    expect.clear();
    for (const auto& r : plain)
        if (r.family.count() == 0) expect.push_back(r);
    REQUIRE(none == expect);

    auto combo = scan([&] {
        auto o = range(2, 3000);
        o.kappa = 2;
        o.mod8_not5 = true;
        return o;
    }());
    expect.clear();
    for (const auto& r : plain)
        if (r.kappa == 2 && r.d % 8 != 5) expect.push_back(r);
    REQUIRE(combo == expect);
    std::vector<i64> ds;
    for (const auto& r : combo) ds.push_back(r.d);
    CHECK(ds == std::vector<i64>{3, 6, 11, 38, 83, 227});
}

TEST_CASE("worker count never changes the output") {
    for (auto mk : {+[] { return range(2, 30000); },
                    +[] {
                        auto o = range(5000, 26000);
                        o.kappa = 2;
                        return o;
                    }}) {
        auto o1 = mk();
        o1.jobs = 1;
        auto o4 = mk();
        o4.jobs = 4;
        auto o9 = mk();
        o9.jobs = 9;
        auto r1 = scan(o1);
        REQUIRE(r1 == scan(o4));
        REQUIRE(r1 == scan(o9));
    }
}

TEST_CASE("scan_range rejects bad options") {
    CHECK_THROWS_AS(scan(range(1, 50)), std::invalid_argument);
    CHECK_THROWS_AS(scan(range(50, 2)), std::invalid_argument);
    CHECK_THROWS_AS(scan(range(2, caliber::kMaxScanHi + 1)), std::invalid_argument);
    auto o = range(2, 50);
    o.jobs = 0;
    CHECK_THROWS_AS(scan(o), std::invalid_argument);
    auto f = range(2, 50);
    f.family = "bogus";
    CHECK_THROWS_AS(scan(f), std::invalid_argument);
    auto m = range(2, 50);
    m.mod8 = 9;
    CHECK_THROWS_AS(scan(m), std::invalid_argument);
}

TEST_CASE("suite reports tally cleanly on a small range") {
    for (const char* name : {"sandwich", "lowerbound", "pow2", "multiplicativity", "convolution",
                             "prop31", "prop36"}) {
        auto rep = caliber::verify_suite(name, 2, 1000);
        INFO(name);
        CHECK(rep.ok());
        CHECK(rep.failed == 0);
        CHECK(rep.checked == rep.passed + rep.failed + rep.vacuous);
        CHECK(rep.failing_d.empty());
        CHECK(rep.anomalous_d.empty());
    }
    auto split = caliber::verify_suite("corollary-splitprime", 2, 1000);
    CHECK(split.ok());
    CHECK(split.anomalous_d == std::vector<i64>{3, 5});
    CHECK(split.checked ==
          split.passed + split.failed + split.vacuous + static_cast<i64>(split.anomalous_d.size()));
    CHECK(split.vacuous == 6);  // the whole exception list lies below 1000

    auto prop31 = caliber::verify_suite("prop31", 2, 1000);
    CHECK(prop31.passed == 7);  // 2, 5, 13, 29, 53, 173, 293

    CHECK_THROWS_AS(caliber::verify_suite("bogus", 2, 100), std::invalid_argument);
    CHECK_THROWS_AS(caliber::verify_suite("sandwich", 1, 100), std::invalid_argument);
}

TEST_CASE("the even-spacing sampler is deterministic and in range") {
    auto a = caliber::detail::sample_squarefree(2, 10000, 50);
    auto b = caliber::detail::sample_squarefree(2, 10000, 50);
    REQUIRE(a == b);
    REQUIRE(a.size() == 50);
    for (i64 d : a) {
        REQUIRE(d >= 2);
        REQUIRE(d <= 10000);
        REQUIRE(caliber::is_square_free(d));
    }
    REQUIRE(std::is_sorted(a.begin(), a.end()));
    auto small = caliber::detail::sample_squarefree(2, 20, 50);
    REQUIRE(small.size() == 12);  // all of them when fewer exist than asked
}