#include <catch2/catch_amalgamated.hpp>

#include "caliber/classify.hpp"
#include "caliber/forms.hpp"
#include "oracles.hpp"

using caliber::i64;
using caliber::RDRepresentation;
using caliber::Verdict;

TEST_CASE("the frozen field lists") {
    CHECK(caliber::kCaliberOneFields == std::vector<i64>{2, 13, 29, 53, 173, 293});
    CHECK(caliber::kCaliberTwoFieldsNot5Mod8 == std::vector<i64>{3, 6, 11, 38, 83, 227});
    CHECK(caliber::kClassOneN2Plus4 == std::vector<i64>{13, 19, 53, 173, 293});
    CHECK(caliber::kClassOneN2Plus1 == std::vector<i64>{2, 17, 37, 101, 197, 677});
    CHECK(caliber::kClassOneN2PlusMinus2 ==
          std::vector<i64>{3, 6, 7, 11, 14, 23, 38, 47, 62, 83, 167, 227, 398});
    CHECK(caliber::kClassOneRDExceptions == std::vector<i64>{2, 3, 17, 33});
    CHECK(caliber::in_list(caliber::kCaliberOneFields, 13));
    CHECK_FALSE(caliber::in_list(caliber::kCaliberOneFields, 5));
}

TEST_CASE("rd representations on worked values") {
    // 13 = 3^2 + 4: r divides 4n but not 2n, and sits outside (-n, n].
    CHECK(caliber::rd_representations(13) == std::vector<RDRepresentation>{{3, 4, false, false}});
    CHECK(caliber::rd_representations(33) == std::vector<RDRepresentation>{{6, -3, true, true}});
    CHECK(caliber::rd_representations(7) == std::vector<RDRepresentation>{{3, -2, true, true}});
    auto r3 = caliber::rd_representations(3);
    REQUIRE(r3.size() == 3);
    CHECK(r3[0] == RDRepresentation{1, 2, true, false});
    CHECK(r3[1] == RDRepresentation{2, -1, true, true});
    CHECK(r3[2] == RDRepresentation{3, -6, true, false});
    auto r5 = caliber::rd_representations(5);
    REQUIRE(r5.size() == 4);
    CHECK(r5[0] == RDRepresentation{1, 4, false, false});
    CHECK(r5[1] == RDRepresentation{2, 1, true, true});
    CHECK(r5[2] == RDRepresentation{3, -4, false, false});
    CHECK(r5[3] == RDRepresentation{5, -20, false, false});
    CHECK(caliber::minimal_rd(13).value() == RDRepresentation{3, 4, false, false});
    CHECK(caliber::minimal_rd(6).value().n == 2);
    CHECK_FALSE(caliber::minimal_rd(46).has_value());
}

TEST_CASE("rd scan window misses nothing") {
    for (i64 d = 2; d <= 3000; ++d) {
        if (!caliber::is_square_free(d)) continue;
        auto got = caliber::rd_representations(d);
        auto want = oracle::rd_scan(d);
        INFO("d=" << d);
        REQUIRE(got.size() == want.size());
        for (size_t i = 0; i < got.size(); ++i) {
            REQUIRE(got[i].n == want[i].first);
            REQUIRE(got[i].r == want[i].second);
            REQUIRE(got[i].divides_2n == ((2 * want[i].first) % want[i].second == 0));
            REQUIRE(got[i].classical_range ==
                    (-want[i].first < want[i].second && want[i].second <= want[i].first));
        }
    }
}

TEST_CASE("rd type membership") {
    for (i64 d : {2LL, 3LL, 5LL, 6LL, 7LL, 11LL, 13LL, 14LL, 17LL, 21LL, 29LL, 33LL, 53LL})
        CHECK(caliber::is_rd_type(d));
    CHECK(caliber::is_rd_type(79));  // 81 - 2, despite h = 3
    for (i64 d : {22LL, 46LL, 67LL, 103LL}) CHECK_FALSE(caliber::is_rd_type(d));
}

TEST_CASE("special families") {
    CHECK(caliber::special_family(17).tag() == "n2p1");
    CHECK(caliber::special_family(29).tag() == "n2p4");
    CHECK(caliber::special_family(11).tag() == "n2p2");
    CHECK(caliber::special_family(7).tag() == "n2m2");
    CHECK(caliber::special_family(23).tag() == "n2m2");
    CHECK(caliber::special_family(10).tag() == "n2p1");
    CHECK(caliber::special_family(2).tag() == "multiple");   // 1+1 and 4-2
    CHECK(caliber::special_family(5).tag() == "multiple");   // 4+1 and 1+4
    CHECK(caliber::special_family(21).tag() == "none");
    CHECK(caliber::special_family(2).count() == 2);
    auto fam5 = caliber::special_family(5);
    CHECK(fam5.n2p1);
    CHECK(fam5.n2p4);
    CHECK_FALSE(fam5.n2p2);
    CHECK_FALSE(fam5.n2m2);
    // Membership recomputed naively.
    for (i64 d = 2; d <= 2000; ++d) {
        auto fam = caliber::special_family(d);
        auto has = [&](i64 off) {
            for (i64 n = 1; n * n <= d + 2; ++n)
                if (n * n + off == d) return true;
            return false;
        };
        REQUIRE(fam.n2p1 == has(1));
        REQUIRE(fam.n2p4 == has(4));
        REQUIRE(fam.n2p2 == has(2));
        REQUIRE(fam.n2m2 == has(-2));
    }
}

TEST_CASE("shape verdicts for caliber one") {
    CHECK(caliber::caliber_one_shape_verdict(1, 1, caliber::special_family(13)) == Verdict::Pass);
    CHECK(caliber::caliber_one_shape_verdict(2, 1, caliber::special_family(13)) ==
          Verdict::Vacuous);
    CHECK(caliber::caliber_one_shape_verdict(1, 2, caliber::special_family(13)) == Verdict::Fail);
    CHECK(caliber::caliber_one_shape_verdict(1, 1, caliber::special_family(11)) == Verdict::Fail);
    CHECK(caliber::check_caliber_one_shape(13) == Verdict::Pass);
    CHECK(caliber::check_caliber_one_shape(5) == Verdict::Pass);  // 5 = 1 + 4
    CHECK(caliber::check_caliber_one_shape(10) == Verdict::Vacuous);
    for (i64 d : caliber::kCaliberOneFields)
        REQUIRE(caliber::check_caliber_one_shape(d) == Verdict::Pass);
}

TEST_CASE("shape verdicts for caliber two") {
    CHECK(caliber::caliber_two_shape_verdict(3, 2, 1, true) == Verdict::Pass);
    CHECK(caliber::caliber_two_shape_verdict(3, 1, 1, true) == Verdict::Vacuous);
    CHECK(caliber::caliber_two_shape_verdict(21, 2, 1, true) == Verdict::Vacuous);  // 5 mod 8
    CHECK(caliber::caliber_two_shape_verdict(3, 2, 2, true) == Verdict::Fail);
    CHECK(caliber::caliber_two_shape_verdict(3, 2, 1, false) == Verdict::Fail);
    CHECK(caliber::check_caliber_two_shape(3) == Verdict::Pass);
    CHECK(caliber::check_caliber_two_shape(10) == Verdict::Vacuous);
    CHECK(caliber::check_caliber_two_shape(17) == Verdict::Vacuous);  // caliber 3
    CHECK_THROWS_AS(caliber::check_caliber_two_shape(21), std::invalid_argument);
    for (i64 d : caliber::kCaliberTwoFieldsNot5Mod8)
        REQUIRE(caliber::check_caliber_two_shape(d) == Verdict::Pass);
}
