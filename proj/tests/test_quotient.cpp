#include <doctest.h>

#include <random>

#include "gzcl/quotient.hpp"
#include "gzcl/verify.hpp"

using namespace gzcl;

TEST_SUITE("quotient") {

TEST_CASE("basis membership") {
    const auto q15 = build_quotient(15);
    const auto q21 = build_quotient(21);
    CHECK(q15->in_basis({3, 6}));
    CHECK(q15->in_basis({3, 5}));
    CHECK(q21->in_basis({3, 6}));
    CHECK(q21->in_basis({6, 4}));
    CHECK(*q21->basis_index({3, 6}) != *q21->basis_index({6, 4}));
    for (int n = 6; n <= 30; ++n)
        CHECK(build_quotient(n)->in_basis({0, 0}));
}

TEST_CASE("normal forms of monomials") {
    const auto q22 = build_quotient(22);
    const auto q21 = build_quotient(21);
    CHECK(q22->nf_monomial(12, 1).is_zero());
    CHECK(q22->nf_monomial(9, 3).is_zero());
    CHECK(q22->nf_monomial(3, 7).is_zero());
    CHECK(q21->nf_monomial(9, 2) == Poly{{3, 6}});
    CHECK(q21->nf_monomial(3, 6) == Poly{{3, 6}});
}

TEST_CASE("heights") {
    CHECK(brute_heights(*build_quotient(15)) == Heights{12, 6});
    CHECK(brute_heights(*build_quotient(24)) == Heights{12, 7});
    CHECK(brute_heights(*build_quotient(30)) == Heights{25, 13});
    CHECK(heights_closed_form(15) == Heights{12, 6});
    CHECK(heights_closed_form(24) == Heights{12, 7});
    CHECK(heights_closed_form(28).h2 == 19);
    for (int t = 3; t <= 6; ++t) {
        const int n = (1 << t) + (1 << (t - 1));
        CHECK(heights_closed_form(n) == Heights{(1 << t) - 4, (1 << (t - 1)) - 1});
    }
    for (int n = 7; n <= 64; ++n) {
        CAPTURE(n);
        CHECK(brute_heights(*build_quotient(n)) == heights_closed_form(n));
    }
}

TEST_CASE("class nonvanishing") {
    const auto q27 = build_quotient(27);
    CHECK(class_nonzero(*q27, 19, 2));
    CHECK(class_nonzero(*q27, 0, 0));
    CHECK_FALSE(class_nonzero(*q27, 36, 0));
    CHECK_FALSE(class_nonzero(*q27, 0, 24));
    CHECK_FALSE(class_nonzero(*q27, 30, 4));
}

TEST_CASE("per-n quotient properties for 6 <= n <= 64") {
    for (int n = 6; n <= 64; ++n) {
        const Report rep = check_quotient_at(n, 200, 1234 + static_cast<std::uint64_t>(n));
        CAPTURE(n);
        if (!rep.passed())
            FAIL_CHECK(rep.first_failure()->label << ": " << rep.first_failure()->detail);
    }
}

TEST_CASE("fast path agrees with division on 10^4 random monomials") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> pick_n(7, 64);
    int checked = 0;
    while (checked < 10000) {
        const auto q = build_quotient(pick_n(rng));
        for (int k = 0; k < 250; ++k, ++checked) {
            const int d = std::uniform_int_distribution<int>(0, q->max_degree() + 3)(rng);
            std::vector<Monomial> options;
            for (int b = 0; 2 * b <= d; ++b)
                if ((d - 2 * b) % 3 == 0)
                    options.push_back({static_cast<std::uint32_t>(b), static_cast<std::uint32_t>((d - 2 * b) / 3)});
            if (options.empty())
                continue;
            const Monomial m = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
            REQUIRE(reduce_fast_path(*q, m.b, m.c) == normal_form(Poly(m), q->basis_gb()));
        }
    }
}

TEST_CASE("top-degree classes") {
    for (int t = 4; t <= 6; ++t)
        CHECK(verify_top_classes_low(t).passed());
    for (int t = 5; t <= 6; ++t) {
        CHECK(verify_top_classes_quarter(t, 1).passed());
        CHECK(verify_top_classes_quarter(t, 2).passed());
        for (int s = 1; s <= t - 3; ++s)
            CHECK(verify_top_classes_s(t, s).passed());
    }
}

TEST_CASE("unsupported n") {
    CHECK_THROWS(build_quotient(5));
    CHECK_THROWS(heights_closed_form(6));
}

}  // TEST_SUITE
