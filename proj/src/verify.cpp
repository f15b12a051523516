#include "gzcl/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gzcl/bounds.hpp"
#include "gzcl/g_series.hpp"
#include "gzcl/groebner.hpp"
#include "gzcl/io.hpp"
#include "gzcl/parallel.hpp"
#include "gzcl/quotient.hpp"
#include "gzcl/zcl.hpp"

namespace gzcl {

namespace {

std::int64_t pow2(int k) { return std::int64_t{1} << k; }

Monomial mono(std::int64_t b, std::int64_t c) { return Monomial{static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(c)}; }

std::string str(int v) { return std::to_string(v); }
std::string str(std::size_t v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }
std::string str(const std::string& v) { return v; }
std::string str(const Monomial& m) { return to_string(m); }
std::string str(const Poly& p) { return to_string(p); }
std::string str(const Heights& h) { return "(" + std::to_string(h.h2) + ", " + std::to_string(h.h3) + ")"; }

std::string str(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

std::string str(const std::vector<Poly>& polys) {
    std::string out = "{";
    for (std::size_t i = 0; i < polys.size(); ++i)
        out += (i ? "; " : "") + to_string(polys[i]);
    return out + "}";
}

std::string str(const TensorElement& x) {
    if (x.is_zero())
        return "0";
    std::string out;
    for (const auto& [l, r] : x.pairs())
        out += (out.empty() ? "" : " + ") + to_string(l) + " (x) " + to_string(r);
    return out;
}

std::string str(const BoundsRow& row) { return to_json(row).dump(); }

template <class T>
void expect(Report& report, std::string label, const T& expected, const T& got) {
    const bool ok = expected == got;
    report.add(std::move(label), ok, ok ? std::string{} : "expected " + str(expected) + ", got " + str(got));
}

void expect_true(Report& report, std::string label, bool got) { expect(report, std::move(label), true, got); }

// Runs `body`, turning an escaped exception into a failed check.
Report guarded(std::string name, const std::function<void(Report&)>& body) {
    Report report{std::move(name), {}};
    try {
        body(report);
    } catch (const std::exception& e) {
        report.add("exception", false, e.what());
    }
    return report;
}

std::string at(int n, const std::string& op) { return "n=" + std::to_string(n) + " " + op; }

GroebnerBasis as_basis(int n, std::vector<Poly> polys) { return GroebnerBasis(n, std::move(polys)); }

Poly random_poly(std::mt19937_64& rng, int max_degree, int max_terms) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> count(1, max_terms);
    std::vector<Monomial> terms;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
        const int d = deg(rng);
        std::vector<Monomial> options;
        for (int b = 0; 2 * b <= d; ++b)
            if ((d - 2 * b) % 3 == 0)
                options.push_back(mono(b, (d - 2 * b) / 3));
        if (options.empty())
            continue;
        terms.push_back(options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
    }
    return Poly::from_terms(std::move(terms));
}

}  // namespace

const std::vector<std::string>& reference_g_table() {
    static const std::vector<std::string> table = {
        "1",
        "0",
        "w2",
        "w3",
        "w2^2",
        "0",
        "w2^3 + w3^2",
        "w2^2*w3",
        "w2^4 + w2*w3^2",
        "w3^3",
        "w2^5",
        "w2^4*w3",
        "w2^6 + w3^4",
        "0",
        "w2^7 + w2^4*w3^2 + w2*w3^4",
        "w2^6*w3 + w3^5",
        "w2^8 + w2^5*w3^2 + w2^2*w3^4",
        "w2^4*w3^3",
        "w2^9 + w2^3*w3^4 + w3^6",
        "w2^8*w3 + w2^2*w3^5",
        "w2^10 + w2*w3^6",
        "w3^7",
        "w2^11 + w2^8*w3^2",
        "w2^10*w3",
        "w2^12 + w2^9*w3^2 + w3^8",
        "w2^8*w3^3",
        "w2^13 + w2*w3^8",
    };
    return table;
}

int expected_zcl(int n) {
    if (auto v = zcl_small_n(n))
        return *v;
    return zcl_closed_form(n);
}

// ---------------------------------------------------------------- g-series

Report check_g_table() {
    return guarded("g table", [](Report& r) {
        const auto& ref = reference_g_table();
        for (std::size_t i = 0; i < ref.size(); ++i) {
            expect(r, "r=" + std::to_string(i) + " g_recurrence", ref[i], to_string(g_recurrence(i)));
            expect(r, "r=" + std::to_string(i) + " g_explicit", ref[i], to_string(g_explicit(i)));
        }
    });
}

Report check_g_constructions(int r_max) {
    return guarded("g constructions", [&](Report& r) {
        for (int i = 0; i <= r_max; ++i) {
            const Poly rec = g_recurrence(static_cast<std::size_t>(i));
            expect(r, "r=" + std::to_string(i) + " recurrence vs explicit", g_explicit(static_cast<std::size_t>(i)), rec);
            bool graded = true;
            for (const auto& m : rec)
                graded = graded && m.degree() == static_cast<std::uint64_t>(i);
            expect_true(r, "r=" + std::to_string(i) + " homogeneous of degree r", graded);
        }
    });
}

Report check_g_power_series_prefix(int r_max) {
    return guarded("power series prefix", [&](Report& r) {
        for (int top = 0; top <= r_max; ++top) {
            Poly sum;
            for (int i = 0; i <= top; ++i)
                sum += g_recurrence(static_cast<std::size_t>(i));
            const Poly prod = (Poly::one() + w2() + w3()) * sum;
            Poly low;
            for (const auto& m : prod)
                if (m.degree() <= static_cast<std::uint64_t>(top))
                    low += Poly(m);
            expect(r, "R=" + std::to_string(top) + " low-degree part", Poly::one(), low);
        }
    });
}

Report check_g_identities(int g3_t_max, int square_i_max, int square_r_max, int doubling_n_max) {
    return guarded("g identities", [&](Report& r) {
        for (int t = 2; t <= g3_t_max; ++t)
            r.merge(verify_g_closed_forms(t));
        for (int i = 0; i <= square_i_max; ++i)
            for (int k = 0; k <= square_r_max; ++k)
                expect_true(r, "squaring i=" + std::to_string(i) + " r=" + std::to_string(k),
                            verify_squaring_identity(i, static_cast<std::size_t>(k)));
        for (int n = 1; n <= doubling_n_max; ++n)
            expect_true(r, "doubling n=" + std::to_string(n), verify_doubling(static_cast<std::size_t>(n)));
    });
}

// ---------------------------------------------------------------- groebner

Report check_groebner_at(int n) {
    return guarded("groebner n=" + std::to_string(n), [&](Report& r) {
        const auto gens = ideal_generators(n);
        const GroebnerBasis bb = reduce_basis(buchberger(gens, n));
        if (n >= 7) {
            const GroebnerBasis cf = closed_form_basis(n);
            const BinaryProfile prof = binary_profile(n);
            expect(r, at(n, "basis size"), static_cast<std::size_t>(prof.t), cf.size());
            for (int i = 0; i < prof.t; ++i) {
                const auto& f = cf[static_cast<std::size_t>(i)];
                expect(r, at(n, "LM(f_" + std::to_string(i) + ")"), prof.predicted_lm(i), leading_monomial(f));
                expect_true(r, at(n, "f_" + std::to_string(i) + " homogeneous"), f.is_homogeneous());
                expect(r, at(n, "f_" + std::to_string(i) + " reduces to 0 by Buchberger basis"), Poly{}, normal_form(f, bb));
            }
            for (std::size_t i = 0; i < gens.size(); ++i)
                expect(r, at(n, "generator " + std::to_string(i) + " reduces to 0 by closed form"), Poly{},
                       normal_form(gens[i], cf));
            expect(r, at(n, "reduced closed form vs reduced Buchberger"), bb.polys(), reduce_basis(cf).polys());
        }
        r.merge(verify_ideal_chain(n));
    });
}

Report check_groebner_examples() {
    return guarded("groebner examples", [](Report& r) {
        const auto p21 = binary_profile(21);
        expect(r, "n=21 t", 4, p21.t);
        expect(r, "n=21 alpha", std::string("0110"),
               std::string{char('0' + p21.alpha[0]), char('0' + p21.alpha[1]), char('0' + p21.alpha[2]),
                           char('0' + p21.alpha[3])});
        expect(r, "n=21 s", std::string("0,2,6,6"),
               std::to_string(p21.s[0]) + "," + std::to_string(p21.s[1]) + "," + std::to_string(p21.s[2]) + "," +
                   std::to_string(p21.s[3]));
        const auto p15 = binary_profile(15);
        bool zero = true;
        for (int i = 0; i < 4; ++i)
            zero = zero && p15.alpha[static_cast<std::size_t>(i)] == 0 && p15.s[static_cast<std::size_t>(i)] == 0;
        expect_true(r, "n=15 alpha and s vanish", zero);

        const auto f21 = closed_form_basis(21);
        expect(r, "n=21 f_0", w2() * pow(w2(), 9) + w2() * pow(w3(), 6), f21[0]);
        expect(r, "n=21 f_1", Poly{{8, 1}, {2, 5}}, f21[1]);
        expect(r, "n=21 f_2", Poly(Monomial{4, 5}), f21[2]);
        expect(r, "n=21 f_3", Poly(Monomial{0, 7}), f21[3]);
        expect(r, "n=15 f_0", g_recurrence(14), closed_form_basis(15)[0]);
        expect(r, "n=22 f_1", Poly{{8, 2}, {2, 6}}, closed_form_basis(22)[1]);

        const auto f15 = closed_form_basis(15);
        expect(r, "NF(w3^7) in W_15", Poly{}, normal_form(pow(w3(), 7), f15));
        const Poly nf_basis = normal_form(Poly{{3, 6}}, f21);
        expect(r, "basis monomial is a fixpoint", Poly{{3, 6}}, nf_basis);
        expect(r, "NF(w2^12) = NF(w2^3 w3^6) in W_21", normal_form(Poly{{3, 6}}, f21), normal_form(pow(w2(), 12), f21));

        expect(r, "buchberger({1})", std::vector<Poly>{Poly::one()}, reduce_basis(buchberger({Poly::one()})).polys());
        expect(r, "buchberger({w2})", std::vector<Poly>{w2()}, reduce_basis(buchberger({w2()})).polys());
        expect(r, "reduce_basis({w2, w2^2 + w3})", std::vector<Poly>{w2(), w3()},
               reduce_basis(as_basis(0, {w2(), w2() * w2() + w3()})).polys());

        for (int k = 13; k <= 60; ++k)
            expect_true(r, "g_" + std::to_string(k) + " in I_15", ideal_member(g_recurrence(static_cast<std::size_t>(k)), 15));
        for (int n = 6; n <= 64; ++n)
            expect(r, at(n, "1 not in I_n"), false, ideal_member(Poly::one(), n));
        expect_true(r, "w2^6 in I_12", ideal_member(pow(w2(), 6), 12));
        expect_true(r, "g_24 + w2^12 + w2^3 w3^6 in w3 I_21",
                    w3_ideal_member(g_recurrence(24) + pow(w2(), 12) + Poly{{3, 6}}, 21));
        expect(r, "w2 not in w3 I_21", false, w3_ideal_member(w2(), 21));
        expect_true(r, "0 in w3 I_21", w3_ideal_member(Poly{}, 21));
    });
}

Report check_squaring_membership(int n_max, int trials, std::uint64_t seed) {
    return guarded("squaring membership", [&](Report& r) {
        for (int n = 6; n <= n_max; ++n)
            r.merge(verify_squaring_membership(n, trials, seed + static_cast<std::uint64_t>(n)));
    });
}

Report check_membership_lemmas(int t_lo, int t_hi) {
    return guarded("membership lemmas", [&](Report& r) {
        for (int t = t_lo; t <= t_hi; ++t)
            r.merge(verify_membership_lemmas(t));
    });
}

Report check_case_bases(int t_lo, int t_hi) {
    return guarded("case bases", [&](Report& r) {
        for (int t = t_lo; t <= t_hi; ++t)
            r.merge(verify_case_bases(t));
    });
}

// ---------------------------------------------------------------- quotient

Report check_quotient_at(int n, int samples, std::uint64_t seed) {
    return guarded("quotient n=" + std::to_string(n), [&](Report& r) {
        const auto q = build_quotient(n);
        const GroebnerBasis& gb = q->basis_gb();
        if (n >= 7)
            expect(r, at(n, "heights"), heights_closed_form(n), brute_heights(*q));

        // Top dimension, checked against the staircase directly.
        bool basis_ok = true;
        for (int d = 0; d <= q->max_degree(); ++d)
            for (const auto& m : q->basis_in_degree(d))
                basis_ok = basis_ok && !gb.first_divisor(m) && static_cast<int>(m.degree()) < 3 * n - 9;
        expect_true(r, at(n, "basis monomials are standard and below 3n-9"), basis_ok);
        bool top_covered = true;
        for (int d = 3 * n - 9; d <= 3 * n - 4; ++d)
            for (int b = 0; 2 * b <= d; ++b)
                if ((d - 2 * b) % 3 == 0)
                    top_covered = top_covered && gb.first_divisor(mono(b, (d - 2 * b) / 3)).has_value();
        expect_true(r, at(n, "every monomial of degree 3n-9..3n-4 is a leading-term multiple"), top_covered);

        if (n >= 7)
            r.merge(verify_cuplength_classes(n));

        std::mt19937_64 rng(seed);
        const int top = q->max_degree();
        for (int i = 0; i < samples; ++i) {
            const int d = std::uniform_int_distribution<int>(0, top)(rng);
            std::vector<Monomial> options;
            for (int b = 0; 2 * b <= d; ++b)
                if ((d - 2 * b) % 3 == 0)
                    options.push_back(mono(b, (d - 2 * b) / 3));
            if (options.empty())
                continue;
            const Monomial m = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
            const Poly division = normal_form(Poly(m), gb);
            if (n >= 7)
                expect(r, at(n, "fast path " + to_string(m)), division, reduce_fast_path(*q, m.b, m.c));
            expect(r, at(n, "table NF " + to_string(m)), division, q->nf_monomial(m.b, m.c));
        }
        for (int i = 0; i < samples; ++i) {
            const Poly p = random_poly(rng, top + 6, 6);
            const Poly s = random_poly(rng, top + 6, 6);
            const Poly np = normal_form(p, gb);
            expect(r, at(n, "NF idempotent on " + to_string(p)), np, normal_form(np, gb));
            expect(r, at(n, "NF linear on " + to_string(p) + " | " + to_string(s)), np + normal_form(s, gb),
                   normal_form(p + s, gb));
            expect(r, at(n, "table NF agrees on " + to_string(p)), np, q->nf(p));
        }
    });
}

Report check_quotient_examples() {
    return guarded("quotient examples", [](Report& r) {
        const auto q15 = build_quotient(15);
        const auto q21 = build_quotient(21);
        const auto q22 = build_quotient(22);
        const auto q27 = build_quotient(27);
        expect_true(r, "w2^3 w3^5 in B_15", q15->in_basis({3, 5}));
        expect_true(r, "w2^3 w3^6 in B_15", q15->in_basis({3, 6}));
        expect_true(r, "w2^3 w3^6 in B_21", q21->in_basis({3, 6}));
        expect_true(r, "w2^6 w3^4 in B_21", q21->in_basis({6, 4}));
        expect_true(r, "1 in B_21", q21->in_basis({0, 0}));
        expect(r, "W_22 w2^12 w3", Poly{}, q22->nf_monomial(12, 1));
        expect(r, "W_22 w2^9 w3^3", Poly{}, q22->nf_monomial(9, 3));
        expect(r, "W_21 w2^9 w3^2", Poly{{3, 6}}, q21->nf_monomial(9, 2));
        expect(r, "W_21 w2^12", Poly{{3, 6}}, q21->nf_monomial(12, 0));
        expect(r, "W_15 heights", Heights{12, 6}, brute_heights(*q15));
        expect(r, "W_24 heights", Heights{12, 7}, brute_heights(*build_quotient(24)));
        expect(r, "W_30 heights", Heights{25, 13}, brute_heights(*build_quotient(30)));
        expect(r, "closed heights n=24", Heights{12, 7}, heights_closed_form(24));
        expect(r, "closed h2 n=28", 19, heights_closed_form(28).h2);
        expect_true(r, "W_27 w2^19 w3^2 != 0", class_nonzero(*q27, 19, 2));
        expect_true(r, "W_27 1 != 0", class_nonzero(*q27, 0, 0));
        // degree 3n-9 = 72 for n = 27
        expect(r, "W_27 w2^36 = 0", false, class_nonzero(*q27, 36, 0));
        expect(r, "W_27 w3^24 = 0", false, class_nonzero(*q27, 0, 24));
    });
}

Report check_top_class_lemmas(int t_hi) {
    return guarded("top-degree classes", [&](Report& r) {
        for (int t = 4; t <= t_hi; ++t)
            r.merge(verify_top_classes_low(t));
        for (int t = 5; t <= t_hi; ++t) {
            r.merge(verify_top_classes_quarter(t, 1));
            r.merge(verify_top_classes_quarter(t, 2));
            for (int s = 1; s <= t - 3; ++s)
                r.merge(verify_top_classes_s(t, s));
        }
    });
}

// ---------------------------------------------------------------- zcl

Report check_zcl_values(const std::map<int, int>& computed) {
    return guarded("zcl values", [&](Report& r) {
        for (const auto& [n, value] : computed) {
            expect(r, at(n, "zcl_wn"), expected_zcl(n), value);
            if (auto next = computed.find(n + 1); next != computed.end())
                expect_true(r, at(n, "zcl(W_n) <= zcl(W_{n+1})"), value <= next->second);
        }
    });
}

Report check_zero_divisor_heights(int n) {
    return guarded("zero-divisor heights n=" + std::to_string(n), [&](Report& r) {
        const auto q = build_quotient(n);
        const Heights h = brute_heights(*q);
        const int cap2 = zero_divisor_height(h.h2);
        const int cap3 = zero_divisor_height(h.h3);
        expect_true(r, at(n, "z(w2)^" + std::to_string(cap2) + " != 0"), zero_divisor_product_nonzero(*q, cap2, 0));
        expect(r, at(n, "z(w2)^" + std::to_string(cap2 + 1) + " = 0"), false, zero_divisor_product_nonzero(*q, cap2 + 1, 0));
        expect_true(r, at(n, "z(w3)^" + std::to_string(cap3) + " != 0"), zero_divisor_product_nonzero(*q, 0, cap3));
        expect(r, at(n, "z(w3)^" + std::to_string(cap3 + 1) + " = 0"), false, zero_divisor_product_nonzero(*q, 0, cap3 + 1));
    });
}

namespace {

TensorElement assembled_product(const std::shared_ptr<const QuotientRing>& q, int beta, int gamma) {
    TensorElement sum(q);
    for (int k = 0; k <= 2 * beta + 3 * gamma; ++k)
        sum += graded_piece(q, beta, gamma, k).element;
    return sum;
}

}  // namespace

Report check_tensor_symmetry(int n, int samples, std::uint64_t seed) {
    return guarded("tensor symmetry n=" + std::to_string(n), [&](Report& r) {
        const auto q = build_quotient(n);
        const Heights h = brute_heights(*q);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> bdist(0, std::min(zero_divisor_height(h.h2), 24));
        std::uniform_int_distribution<int> gdist(0, std::min(zero_divisor_height(h.h3), 12));
        for (int i = 0; i < samples; ++i) {
            const int beta = bdist(rng);
            const int gamma = gdist(rng);
            const TensorElement x = assembled_product(q, beta, gamma);
            expect(r, at(n, "swap fixes z2^" + std::to_string(beta) + " z3^" + std::to_string(gamma)), str(x),
                   str(x.swapped()));
        }
    });
}

Report check_graded_pieces_vs_naive(int n, int max_total) {
    return guarded("graded pieces n=" + std::to_string(n), [&](Report& r) {
        const auto q = build_quotient(n);
        const TensorElement z2 = TensorElement::z(q, w2());
        const TensorElement z3 = TensorElement::z(q, w3());
        for (int beta = 0; beta <= max_total; ++beta) {
            for (int gamma = 0; beta + gamma <= max_total; ++gamma) {
                const TensorElement naive = pow(z2, static_cast<std::uint64_t>(beta)) * pow(z3, static_cast<std::uint64_t>(gamma));
                const std::string tag = "z2^" + std::to_string(beta) + " z3^" + std::to_string(gamma);
                expect(r, at(n, tag + " pieces sum to the product"), str(naive), str(assembled_product(q, beta, gamma)));
                expect(r, at(n, tag + " nonzero test"), !naive.is_zero(), zero_divisor_product_nonzero(*q, beta, gamma));
                for (int k = 0; k <= 2 * beta + 3 * gamma; ++k) {
                    if (graded_piece_nonzero(*q, beta, gamma, k) != !naive.left_degree(k).is_zero()) {
                        r.add(at(n, tag + " piece r=" + std::to_string(k)), false, "nonzero test disagrees with product");
                    }
                }
            }
        }
    });
}

Report check_zcl_witnesses() {
    return guarded("zcl witnesses", [](Report& r) {
        const auto q21 = build_quotient(21);
        const auto q22 = build_quotient(22);
        const Monomial a{3, 6}, b{6, 4};
        expect(r, "n=21 piece (15, 6, 24)", str(TensorElement::from_pairs(q21, {{a, b}, {b, a}})),
               str(graded_piece(q21, 15, 6, 24).element));
        expect(r, "n=22 piece (15, 7, 24)", str(TensorElement::from_pairs(q22, {{Monomial{3, 6}, Monomial{6, 5}}})),
               str(graded_piece(q22, 15, 7, 24).element));
        expect_true(r, "n=21 z2^15 z3^6 != 0", zero_divisor_product_nonzero(*q21, 15, 6));
        expect(r, "n=21 z2^15 z3^7 = 0", false, zero_divisor_product_nonzero(*q21, 15, 7));
        expect_true(r, "n=21 1 (x) 1 != 0", zero_divisor_product_nonzero(*q21, 0, 0));
        expect(r, "n=21 piece r=0", str(TensorElement::simple(q21, Poly::one(), q21->nf_monomial(3, 2))),
               str(graded_piece(q21, 3, 2, 0).element));
        bool threw = false;
        try {
            graded_piece(q21, 3, 2, 13);
        } catch (const std::out_of_range&) {
            threw = true;
        }
        expect_true(r, "piece degree out of range is rejected", threw);
        const ZclResult z21 = zcl_wn(q21);
        expect(r, "zcl(W_21)", 21, z21.zcl);
        expect(r, "zcl(W_21) witness", std::string("(15, 6)"),
               "(" + std::to_string(z21.beta) + ", " + std::to_string(z21.gamma) + ")");
        r.merge(verify_zero_divisor_algebra(q21, 6, 21));
        r.merge(verify_zero_divisor_algebra(build_quotient(10), 6, 10));
    });
}

Report check_upper_bound_lemmas(int t_lo, int t_hi) {
    return guarded("upper-bound lemmas", [&](Report& r) {
        for (int t = t_lo; t <= t_hi; ++t)
            r.merge(verify_upper_bound_lemmas(t));
        const auto q20 = build_quotient(20);
        expect(r, "n=20 z2^15 z3^6 = 0", false, zero_divisor_product_nonzero(*q20, 15, 6));
        expect(r, "n=20 z2^14 z3^7 = 0", false, zero_divisor_product_nonzero(*q20, 14, 7));
        const auto q30 = build_quotient(30);
        expect(r, "n=30 z2^28 z3^14 = 0", false, zero_divisor_product_nonzero(*q30, 28, 14));
        expect(r, "n=30 z2^30 z3^12 = 0", false, zero_divisor_product_nonzero(*q30, 30, 12));
    });
}

// ---------------------------------------------------------------- bounds

Report check_bounds_rows(const std::map<int, int>& computed) {
    return guarded("bounds rows", [&](Report& r) {
        for (const auto& [n, value] : computed) {
            if (n < 15)
                continue;
            const BoundsRow row = bounds_row(n, value);
            expect(r, at(n, "row from computed vs closed-form zcl"), str(bounds_row(n, zcl_closed_form(n))), str(row));
            expect(r, at(n, "lo = 1 + zcl"), value + 1, row.zcl_oriented_lo);
            expect(r, at(n, "hi = 2 + zcl"), value + 2, row.zcl_oriented_hi);
            expect(r, at(n, "tc = 1 + lo"), row.zcl_oriented_lo + 1, row.tc_lower);
            if (row.zcl_oriented_exact)
                expect(r, at(n, "exact = lo"), row.zcl_oriented_lo, *row.zcl_oriented_exact);
            if (row.b_deg) {
                expect_true(r, at(n, "|a| < |b|"), row.a_deg < *row.b_deg);
                expect(r, at(n, "|a| + |b|"), 3 * n - 5, row.a_deg + *row.b_deg);
            }
        }
        const auto e15 = exceptional_degrees(15);
        expect(r, "n=15 |a|", 12, e15.a);
        expect(r, "n=15 |b|", std::optional<int>{}, e15.b);
        expect(r, "n=24 |a|", 28, exceptional_degrees(24).a);
        expect(r, "n=20 |a|", 27, exceptional_degrees(20).a);
        const BoundsRow r15 = bounds_row(15, 20);
        expect(r, "n=15 row", std::string("21 22 21 22"),
               std::to_string(r15.zcl_oriented_lo) + " " + std::to_string(r15.zcl_oriented_hi) + " " +
                   str(r15.zcl_oriented_exact) + " " + std::to_string(r15.tc_lower));
        const BoundsRow r30 = bounds_row(30, 42);
        expect(r, "n=30 exact", std::optional<int>{43}, r30.zcl_oriented_exact);
        expect(r, "n=30 tc", 44, r30.tc_lower);
        const BoundsRow r22 = bounds_row(22, 22);
        expect(r, "n=22 row", std::string("23 24 none"),
               std::to_string(r22.zcl_oriented_lo) + " " + std::to_string(r22.zcl_oriented_hi) + " " +
                   str(r22.zcl_oriented_exact));
    });
}

Report check_ineq(int t_lo, int t_hi) {
    return guarded("inequality arithmetic", [&](Report& r) {
        for (int t = t_lo; t <= t_hi; ++t)
            r.merge(verify_ineq_arithmetic(t));
    });
}

Report check_tc_structure(int t, const std::map<int, int>& computed) {
    return guarded("tc table t=" + std::to_string(t), [&](Report& r) {
        const auto lookup = [&](int n) {
            auto it = computed.find(n);
            if (it == computed.end())
                throw std::out_of_range("no computed zcl for n=" + std::to_string(n));
            return it->second;
        };
        const auto bands = tc_table(t, lookup);
        const int T = static_cast<int>(pow2(t));
        // (zcl(W_n), exact) per band as printed in the reference TC table.
        std::vector<std::pair<int, bool>> want = {
            {T + T / 2 - 4, true},          {T + T / 2 - 4, false},          {T + T / 2 - 3, false},
            {T + T / 2 - 2, false},         {2 * T + T / 8 - 3, false},      {2 * T + T / 8 - 2, false},
            {2 * T + T / 4 - 2, false},
        };
        for (int s = t - 3; s >= 1; --s)
            want.emplace_back(2 * T + T - static_cast<int>(pow2(s + 1)) - 2, true);
        expect(r, "band count", want.size(), bands.size());
        int next_lo = T - 1;
        for (std::size_t i = 0; i < std::min(want.size(), bands.size()); ++i) {
            const auto& band = bands[i];
            const std::string tag = "band " + std::to_string(band.n_lo) + ".." + std::to_string(band.n_hi);
            expect(r, tag + " starts after previous band", next_lo, band.n_lo);
            next_lo = band.n_hi + 1;
            expect_true(r, tag + " uniform", band.uniform);
            expect(r, tag + " zcl(W_n)", want[i].first, band.zcl_wn);
            expect(r, tag + " exact", want[i].second, band.exact);
            expect(r, tag + " zcl lower bound", want[i].first + 1, band.zcl_oriented_lo);
            expect(r, tag + " TC lower bound", want[i].first + 2, band.tc_lower);
        }
        expect(r, "bands end at 2^{t+1}-2", 2 * T - 1, next_lo);
    });
}

// ---------------------------------------------------------------- suites

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"g-series", "groebner", "quotient", "zcl", "bounds"};
    return names;
}

std::map<int, int> compute_zcl_values(int lo, int hi, const VerifyOptions& options) {
    const auto results = parallel_map(static_cast<std::size_t>(hi - lo + 1), options.jobs, [&](std::size_t i) {
        const int n = lo + static_cast<int>(i);
        return options.cache ? cached_zcl(*options.cache, n).zcl : zcl_wn(n).zcl;
    });
    std::map<int, int> out;
    for (std::size_t i = 0; i < results.size(); ++i)
        out[lo + static_cast<int>(i)] = results[i];
    return out;
}

namespace {

using Task = std::function<Report()>;

std::vector<Report> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
    return parallel_map(tasks.size(), jobs, [&](std::size_t i) { return tasks[i](); });
}

std::vector<Report> run_one(const std::string& name, const VerifyOptions& o) {
    if (o.t_max < 4)
        throw std::invalid_argument("t-max must be at least 4");
    const int T = o.t_max;
    const int n_ring_max = static_cast<int>(pow2(T + 1));   // 64 at the default
    const int n_zcl_max = static_cast<int>(pow2(T + 1)) - 2;
    std::vector<Task> tasks;
    if (name == "g-series") {
        tasks = {
            [] { return check_g_table(); },
            [] { return check_g_constructions(512); },
            [] { return check_g_power_series_prefix(64); },
            [T] { return check_g_identities(std::max(7, T + 2), 4, 40, 200); },
        };
        return run_tasks(tasks, o.jobs);
    }
    if (name == "groebner") {
        tasks.push_back([] { return check_groebner_examples(); });
        for (int n = 6; n <= n_ring_max; ++n)
            tasks.push_back([n] { return check_groebner_at(n); });
        tasks.push_back([s = o.seed] { return check_squaring_membership(24, 6, s); });
        tasks.push_back([T] { return check_membership_lemmas(3, T + 1); });
        tasks.push_back([T] { return check_case_bases(4, T + 1); });
        return run_tasks(tasks, o.jobs);
    }
    if (name == "quotient") {
        tasks.push_back([] { return check_quotient_examples(); });
        for (int n = 6; n <= n_ring_max; ++n)
            tasks.push_back([n, s = o.seed] { return check_quotient_at(n, 200, s ^ static_cast<std::uint64_t>(n)); });
        tasks.push_back([T] { return check_top_class_lemmas(T + 1); });
        return run_tasks(tasks, o.jobs);
    }
    if (name == "zcl") {
        std::vector<Report> out{check_zcl_values(compute_zcl_values(6, n_zcl_max, o))};
        for (int n = 6; n <= std::min(40, n_zcl_max); ++n)
            tasks.push_back([n] { return check_zero_divisor_heights(n); });
        for (int n = 6; n <= 30; ++n)
            tasks.push_back([n, s = o.seed] { return check_tensor_symmetry(n, 4, s + static_cast<std::uint64_t>(n)); });
        for (int n : {7, 10, 15, 21})
            tasks.push_back([n] { return check_graded_pieces_vs_naive(n, 12); });
        tasks.push_back([] { return check_zcl_witnesses(); });
        tasks.push_back([T] { return check_upper_bound_lemmas(4, T); });
        for (auto& rep : run_tasks(tasks, o.jobs))
            out.push_back(std::move(rep));
        return out;
    }
    if (name == "bounds") {
        const auto zcl = compute_zcl_values(15, n_zcl_max, o);
        std::vector<Report> out{check_ineq(4, 10), check_bounds_rows(zcl)};
        for (int t = 4; t <= T; ++t)
            out.push_back(check_tc_structure(t, zcl));
        return out;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace

std::vector<Report> run_suite(const std::string& name, const VerifyOptions& options) {
    if (name != "all")
        return run_one(name, options);
    std::vector<Report> out;
    for (const auto& suite : suite_names())
        for (auto& rep : run_one(suite, options))
            out.push_back(std::move(rep));
    return out;
}

}  // namespace gzcl
