#include <doctest.h>

#include <stdexcept>

#include "gzcl/g_series.hpp"
#include "gzcl/groebner.hpp"
#include "gzcl/verify.hpp"

using namespace gzcl;

TEST_SUITE("groebner") {

TEST_CASE("binary profile") {
    const auto p21 = binary_profile(21);
    CHECK(p21.t == 4);
    CHECK(p21.alpha == std::vector<int>{0, 1, 1, 0});
    CHECK(p21.s == std::vector<std::int64_t>{0, 2, 6, 6});
    const auto p15 = binary_profile(15);
    CHECK(p15.alpha == std::vector<int>{0, 0, 0, 0});
    CHECK(p15.s == std::vector<std::int64_t>{0, 0, 0, 0});
    for (int t = 3; t <= 6; ++t) {
        const auto p = binary_profile((1 << (t + 1)) - 2);
        std::vector<int> ones(static_cast<std::size_t>(t), 1);
        CHECK(p.alpha == ones);
    }
    CHECK_THROWS_AS(binary_profile(6), std::domain_error);
}

TEST_CASE("profile invariants") {
    for (int n = 7; n <= 130; ++n) {
        const auto p = binary_profile(n);
        std::int64_t sum = 0;
        for (int j = 0; j < p.t; ++j)
            sum += std::int64_t{p.alpha[static_cast<std::size_t>(j)]} << j;
        CHECK(sum == n - (1 << p.t) + 1);
        CHECK(p.s.back() == sum);
        for (int i = 0; i < p.t; ++i)
            CHECK((n + 1 - p.s[static_cast<std::size_t>(i)]) / 2 - (1 << i) ==
                  (std::int64_t{1} << i) * p.l[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("closed-form basis elements") {
    const auto f21 = closed_form_basis(21);
    CHECK(f21[0] == Poly{{10, 0}, {1, 6}});
    CHECK(f21[1] == Poly{{8, 1}, {2, 5}});
    CHECK(f21[2] == Poly{{4, 5}});
    CHECK(f21[3] == Poly{{0, 7}});
    CHECK(closed_form_basis(15)[0] == Poly{{7, 0}, {4, 2}, {1, 4}});
    CHECK(closed_form_basis(22)[1] == Poly{{8, 2}, {2, 6}});
    CHECK(divides(closed_form_basis(15).lms()[2], Monomial{4, 3}));
    CHECK(closed_form_basis(15).lms()[2] == Monomial{4, 3});
}

TEST_CASE("normal forms") {
    const auto f15 = closed_form_basis(15);
    const auto f21 = closed_form_basis(21);
    CHECK(normal_form(pow(w3(), 7), f15).is_zero());
    CHECK(normal_form(Poly{{3, 6}}, f21) == Poly{{3, 6}});
    CHECK(normal_form(pow(w2(), 12), f21) == normal_form(Poly{{3, 6}}, f21));
}

TEST_CASE("buchberger and reduction on small inputs") {
    CHECK(reduce_basis(buchberger({Poly::one()})).polys() == std::vector<Poly>{Poly::one()});
    CHECK(reduce_basis(buchberger({w2()})).polys() == std::vector<Poly>{w2()});
    CHECK(reduce_basis(GroebnerBasis(0, {w2(), w2() * w2() + w3()})).polys() == std::vector<Poly>{w2(), w3()});
    const auto reduced = reduce_basis(closed_form_basis(21));
    CHECK(reduce_basis(reduced) == reduced);
    CHECK_THROWS_AS(buchberger({Poly{}}), std::invalid_argument);
}

TEST_CASE("closed form equals Buchberger for 7 <= n <= 64") {
    for (int n = 7; n <= 64; ++n) {
        const Report rep = check_groebner_at(n);
        CAPTURE(n);
        if (!rep.passed())
            FAIL_CHECK(rep.first_failure()->label << ": " << rep.first_failure()->detail);
    }
}

TEST_CASE("reduced basis is reduced") {
    for (int n : {6, 7, 15, 21, 40, 64}) {
        const auto gb = reduce_basis(*ideal_basis(n));
        for (std::size_t i = 0; i < gb.size(); ++i)
            for (std::size_t j = 0; j < gb.size(); ++j)
                if (i != j)
                    for (const auto& m : gb[i])
                        CHECK_FALSE(divides(gb.lms()[j], m));
    }
}

TEST_CASE("ideal membership") {
    for (int r = 13; r <= 50; ++r)
        CHECK(ideal_member(g_recurrence(static_cast<std::size_t>(r)), 15));
    for (int n = 6; n <= 40; ++n)
        CHECK_FALSE(ideal_member(Poly::one(), n));
    CHECK(ideal_member(pow(w2(), 6), 12));
    CHECK(w3_ideal_member(g_recurrence(24) + pow(w2(), 12) + Poly{{3, 6}}, 21));
    CHECK_FALSE(w3_ideal_member(w2(), 21));
    CHECK(w3_ideal_member(Poly{}, 21));
}

TEST_CASE("membership lemmas and corollaries") {
    for (int t = 3; t <= 6; ++t) {
        CAPTURE(t);
        CHECK(verify_membership_lemmas(t).passed());
    }
    CHECK((g_recurrence(26) + pow(w2(), 13) + Poly{{1, 8}}).is_zero());
}

TEST_CASE("descending ideals and w3 shift") {
    for (int n = 6; n <= 64; ++n)
        CHECK(verify_ideal_chain(n).passed());
}

TEST_CASE("squares of w3 I_n") { CHECK(check_squaring_membership(24, 6, 99).passed()); }

TEST_CASE("case-by-case bases") {
    for (int t = 4; t <= 6; ++t) {
        CAPTURE(t);
        CHECK(verify_case_bases(t).passed());
    }
}

}  // TEST_SUITE
