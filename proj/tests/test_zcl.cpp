#include <doctest.h>

#include <stdexcept>

#include "gzcl/bounds.hpp"
#include "gzcl/quotient.hpp"
#include "gzcl/verify.hpp"
#include "gzcl/zcl.hpp"

using namespace gzcl;

TEST_SUITE("zcl") {

TEST_CASE("graded pieces quoted in the nonvanishing arguments") {
    const auto q21 = build_quotient(21);
    const Monomial a{3, 6}, b{6, 4};
    const auto piece = graded_piece(q21, 15, 6, 24);
    CHECK(piece.element == TensorElement::from_pairs(q21, {{a, b}, {b, a}}));
    for (const auto& [l, r] : piece.element.pairs()) {
        CHECK(l.degree() == 24);
        CHECK(r.degree() == 2 * 15 + 3 * 6 - 24);
    }
    const auto q22 = build_quotient(22);
    CHECK(graded_piece(q22, 15, 7, 24).element == TensorElement::from_pairs(q22, {{Monomial{3, 6}, Monomial{6, 5}}}));
}

TEST_CASE("piece of left degree zero") {
    const auto q = build_quotient(21);
    CHECK(graded_piece(q, 3, 2, 0).element == TensorElement::simple(q, Poly::one(), q->nf_monomial(3, 2)));
    CHECK(graded_piece(q, 30, 0, 0).element.is_zero());
    CHECK_THROWS_AS(graded_piece(q, 3, 2, 13), std::out_of_range);
    CHECK_THROWS_AS(graded_piece(q, 3, 2, -1), std::out_of_range);
}

TEST_CASE("products of zero divisors") {
    const auto q21 = build_quotient(21);
    CHECK(zero_divisor_product_nonzero(*q21, 15, 6));
    CHECK_FALSE(zero_divisor_product_nonzero(*q21, 15, 7));
    CHECK(zero_divisor_product_nonzero(*q21, 0, 0));
}

TEST_CASE("zcl of small and medium n") {
    CHECK(zcl_wn(6).zcl == 2);
    CHECK(zcl_wn(10).zcl == 8);
    CHECK(zcl_wn(14).zcl == 16);
    CHECK(zcl_wn(15).zcl == 20);
    CHECK(zcl_wn(27).zcl == 34);
    CHECK(zcl_closed_form(25) == 31);
    CHECK(zcl_closed_form(30) == 42);
    CHECK(zcl_closed_form(16) == 20);
    CHECK_THROWS(zcl_closed_form(14));
    CHECK_FALSE(zcl_small_n(15).has_value());
}

TEST_CASE("witness is a real nonvanishing product") {
    for (int n : {6, 13, 21, 22, 30, 45}) {
        const auto q = build_quotient(n);
        const ZclResult res = zcl_wn(q);
        CHECK(res.beta + res.gamma == res.zcl);
        const auto piece = graded_piece(q, res.beta, res.gamma, res.r);
        CHECK(std::find(piece.element.pairs().begin(), piece.element.pairs().end(), res.pair) != piece.element.pairs().end());
        CHECK_FALSE(zero_divisor_product_nonzero(*q, res.beta + 1, res.gamma));
        CHECK_FALSE(zero_divisor_product_nonzero(*q, res.beta, res.gamma + 1));
    }
}

TEST_CASE("zcl over 6 <= n <= 62 with monotonicity") {
    VerifyOptions o;
    const auto values = compute_zcl_values(6, 62, o);
    const Report rep = check_zcl_values(values);
    if (!rep.passed())
        FAIL_CHECK(rep.first_failure()->label << ": " << rep.first_failure()->detail);
    // every case band of the closed form at t = 4 and t = 5 lies inside the range
    for (int t = 4; t <= 5; ++t)
        for (const auto& band : tc_table(t, [&](int n) { return values.at(n); })) {
            CHECK(band.n_lo <= band.n_hi);
            CHECK(band.uniform);
        }
}

TEST_CASE("zero-divisor heights follow the power-of-two rule for n <= 40") {
    CHECK(zero_divisor_height(12) == 15);
    CHECK(zero_divisor_height(16) == 31);
    CHECK(zero_divisor_height(1) == 1);
    for (int n = 6; n <= 40; ++n)
        CHECK(check_zero_divisor_heights(n).passed());
}

TEST_CASE("products are symmetric under swapping factors") {
    for (int n = 6; n <= 30; ++n)
        CHECK(check_tensor_symmetry(n, 6, 77 + static_cast<std::uint64_t>(n)).passed());
}

TEST_CASE("graded pieces reassemble the naive product") {
    for (int n : {6, 7, 10, 15, 21}) {
        const Report rep = check_graded_pieces_vs_naive(n, 12);
        CAPTURE(n);
        if (!rep.passed())
            FAIL_CHECK(rep.first_failure()->label << ": " << rep.first_failure()->detail);
    }
}

TEST_CASE("zero-divisor algebra") {
    for (int n : {8, 15, 21, 30})
        CHECK(verify_zero_divisor_algebra(build_quotient(n), 8, static_cast<std::uint64_t>(n)).passed());
    const auto q = build_quotient(21);
    const auto z2 = TensorElement::z(q, w2());
    const auto z3 = TensorElement::z(q, w3());
    const auto left = [&](const Poly& a) { return TensorElement::simple(q, Poly::one(), a); };
    CHECK(TensorElement::z(q, w2() * w3()) == z2 * z3 + left(w3()) * z2 + left(w2()) * z3);
    CHECK(TensorElement::z(q, pow(w2(), 8)) == pow(z2, 8));
    CHECK(TensorElement::z(q, pow(w2(), 2) + w2() * Poly::one()) ==
          TensorElement::z(q, pow(w2(), 2)) + TensorElement::z(q, w2()));
}

TEST_CASE("tensor elements reject non-basis coordinates") {
    const auto q = build_quotient(21);
    CHECK_THROWS_AS(TensorElement::from_pairs(q, {{Monomial{12, 0}, Monomial{0, 0}}}), std::invalid_argument);
    const auto x = TensorElement::from_pairs(q, {{Monomial{1, 0}, Monomial{0, 1}}, {Monomial{1, 0}, Monomial{0, 1}}});
    CHECK(x.is_zero());
}

TEST_CASE("vanishing at the upper-bound exponents") {
    for (int t = 4; t <= 5; ++t)
        CHECK(verify_upper_bound_lemmas(t).passed());
    const auto q20 = build_quotient(20);
    CHECK_FALSE(zero_divisor_product_nonzero(*q20, 15, 6));
    CHECK_FALSE(zero_divisor_product_nonzero(*q20, 14, 7));
    const auto q30 = build_quotient(30);
    CHECK_FALSE(zero_divisor_product_nonzero(*q30, 28, 14));
    CHECK_FALSE(zero_divisor_product_nonzero(*q30, 30, 12));
}

}  // TEST_SUITE
