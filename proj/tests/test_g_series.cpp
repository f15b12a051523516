#include <doctest.h>

#include "gzcl/g_series.hpp"
#include "gzcl/verify.hpp"

using namespace gzcl;

TEST_SUITE("g-series") {

TEST_CASE("recurrence values") {
    CHECK(g_recurrence(6) == Poly{{3, 0}, {0, 2}});
    CHECK(g_recurrence(13).is_zero());
    CHECK(g_recurrence(1).is_zero());
}

TEST_CASE("explicit formula values") {
    CHECK(g_explicit(8) == Poly{{4, 0}, {1, 2}});
    CHECK(g_explicit(0) == Poly::one());
    CHECK(g_explicit(26) == Poly{{13, 0}, {1, 8}});
}

TEST_CASE("reference table of g_0..g_26") {
    const auto& ref = reference_g_table();
    REQUIRE(ref.size() == 27);
    for (std::size_t r = 0; r < ref.size(); ++r) {
        CAPTURE(r);
        CHECK(to_string(g_recurrence(r)) == ref[r]);
    }
}

TEST_CASE("recurrence agrees with the explicit formula up to 512") {
    for (std::size_t r = 0; r <= 512; ++r) {
        const Poly p = g_recurrence(r);
        REQUIRE(p == g_explicit(r));
        for (const auto& m : p)
            REQUIRE(m.degree() == r);
    }
}

TEST_CASE("local cache matches the shared one") {
    GSeries series;
    const auto all = series.up_to(80);
    for (std::size_t r = 0; r <= 80; ++r)
        CHECK(all[r] == g_recurrence(r));
    CHECK(series.cached() >= 81);
}

TEST_CASE("power series prefix") { CHECK(check_g_power_series_prefix(64).passed()); }

TEST_CASE("closed forms at 2^t-3 and friends") {
    for (int t = 2; t <= 7; ++t) {
        const Report rep = verify_g_closed_forms(t);
        CAPTURE(t);
        CHECK(rep.passed());
    }
    CHECK(g_recurrence(21) == Poly{{0, 7}});
    CHECK(g_recurrence(7) == Poly{{2, 1}});
    CHECK(g_recurrence(11) == Poly{{4, 1}});
}

TEST_CASE("squaring identity") {
    CHECK(verify_squaring_identity(1, 3));
    CHECK(g_recurrence(9) == Poly{{0, 3}});
    CHECK(verify_squaring_identity(2, 2));
    CHECK(g_recurrence(17) == Poly{{4, 3}});
    for (int i = 0; i <= 4; ++i)
        for (std::size_t r = 0; r <= 40; ++r)
            REQUIRE(verify_squaring_identity(i, r));
}

TEST_CASE("doubling identity") {
    CHECK(verify_doubling(3));
    CHECK(verify_doubling(1));
    CHECK(verify_doubling(10));
    CHECK(g_recurrence(20) == pow(g_recurrence(10), 2) + w2() * pow(g_recurrence(9), 2));
    for (std::size_t n = 1; n <= 200; ++n)
        REQUIRE(verify_doubling(n));
}

}  // TEST_SUITE
