#include "gzcl/quotient.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace gzcl {

namespace {

std::int64_t pow2(int k) { return std::int64_t{1} << k; }

int t_of(int n) {
    int t = 0;
    while (pow2(t + 1) - 1 <= n)
        ++t;
    return t;
}

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

Monomial mono(std::int64_t b, std::int64_t c) {
    return {static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(c)};
}

// Terms of the single-element rewrite of m by f_i, with m itself removed.
std::vector<Monomial> lemma_rewrite(const BinaryProfile& prof, int i, const Monomial& m) {
    const std::int64_t li = prof.l[static_cast<std::size_t>(i)];
    const std::int64_t step = pow2(i);
    std::vector<Monomial> out;
    for (std::int64_t e = 1; 3 * e <= 2 * li; ++e) {
        if ((2 * li - 3 * e) % 2 != 0)
            continue;
        const std::int64_t d = (2 * li - 3 * e) / 2;
        if (lucas_binom_mod2(d + e, e))
            out.push_back(mono(m.b - step * (li - d), m.c + step * e));
    }
    return out;
}

std::optional<int> last_divisor(const GroebnerBasis& gb, const Monomial& m) {
    for (std::size_t i = gb.size(); i-- > 0;)
        if (divides(gb.lms()[i], m))
            return static_cast<int>(i);
    return std::nullopt;
}

}  // namespace

QuotientRing::QuotientRing(int n) : n_(n), max_degree_(3 * n - 10) {
    if (n < 6)
        throw std::domain_error("build_quotient: unsupported n = " + std::to_string(n) + " (need n >= 6)");
    gb_ = ideal_basis(n);
    if (n >= 7)
        profile_ = binary_profile(n);

    const auto& lms = gb_->lms();
    const auto pure_b = std::find_if(lms.begin(), lms.end(), [](const Monomial& m) { return m.c == 0; });
    const auto pure_c = std::find_if(lms.begin(), lms.end(), [](const Monomial& m) { return m.b == 0; });
    if (pure_b == lms.end() || pure_c == lms.end())
        throw std::logic_error("build_quotient: staircase does not meet both axes at n=" + std::to_string(n));

    // Every basis monomial lives in the box [0, pure_b.b) x [0, pure_c.c).
    basis_.assign(static_cast<std::size_t>(max_degree_ + 1), {});
    for (std::uint32_t b = pure_b->b; b-- > 0;) {
        for (std::uint32_t c = 0; c < pure_c->c; ++c) {
            const Monomial m{b, c};
            if (gb_->first_divisor(m))
                continue;
            if (m.degree() > static_cast<std::uint64_t>(max_degree_))
                throw std::logic_error("build_quotient: basis monomial " + to_string(m) + " of degree " +
                                       std::to_string(m.degree()) + " >= 3n-9 at n=" + std::to_string(n));
            basis_[m.degree()].push_back(m);
        }
    }
    for (auto& v : basis_)
        std::sort(v.begin(), v.end(), std::greater<>());

    max_b_ = static_cast<std::uint32_t>(max_degree_ / 2);
    max_c_ = static_cast<std::uint32_t>(max_degree_ / 3);
    nf_.assign(std::size_t{max_b_ + 1} * (max_c_ + 1), {});
    has_nf_.assign(nf_.size(), false);

    for (int d = 0; d <= max_degree_; ++d) {
        const auto& here = basis_[static_cast<std::size_t>(d)];
        const std::size_t words = words_for(here.size());
        // Increasing b = increasing lex order: every rewrite lands on smaller b.
        for (std::int64_t b = 0; 2 * b <= d; ++b) {
            if ((d - 2 * b) % 3 != 0)
                continue;
            const Monomial m = mono(b, (d - 2 * b) / 3);
            Bits v(words, 0);
            if (auto idx = basis_index(m)) {
                v[*idx / 64] |= std::uint64_t{1} << (*idx % 64);
            } else {
                std::vector<Monomial> terms;
                if (profile_) {
                    terms = lemma_rewrite(*profile_, *last_divisor(*gb_, m), m);
                } else {
                    const auto i = *gb_->first_divisor(m);
                    for (const auto& x : (*gb_)[i] * (m / lms[i]))
                        if (x != m)
                            terms.push_back(x);
                }
                for (const auto& x : terms) {
                    const auto& w = nf_[slot(x.b, x.c)];
                    for (std::size_t k = 0; k < words; ++k)
                        v[k] ^= w[k];
                }
            }
            nf_[slot(m.b, m.c)] = std::move(v);
            has_nf_[slot(m.b, m.c)] = true;
        }
    }
}

const std::vector<Monomial>& QuotientRing::basis_in_degree(int d) const {
    static const std::vector<Monomial> empty;
    if (d < 0 || d > max_degree_)
        return empty;
    return basis_[static_cast<std::size_t>(d)];
}

std::size_t QuotientRing::dimension() const {
    std::size_t total = 0;
    for (const auto& v : basis_)
        total += v.size();
    return total;
}

std::optional<std::size_t> QuotientRing::basis_index(const Monomial& m) const {
    const auto& v = basis_in_degree(static_cast<int>(m.degree()));
    auto it = std::lower_bound(v.begin(), v.end(), m, std::greater<>());
    if (it == v.end() || *it != m)
        return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
}

bool QuotientRing::in_basis(const Monomial& m) const { return basis_index(m).has_value(); }

std::span<const std::uint64_t> QuotientRing::nf_bits(std::uint32_t b, std::uint32_t c) const {
    if (Monomial{b, c}.degree() > static_cast<std::uint64_t>(max_degree_))
        return {};
    return nf_[slot(b, c)];
}

Poly QuotientRing::to_poly(int degree, std::span<const std::uint64_t> bits) const {
    const auto& v = basis_in_degree(degree);
    std::vector<Monomial> terms;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (i / 64 < bits.size() && (bits[i / 64] >> (i % 64)) & 1u)
            terms.push_back(v[i]);
    return Poly::from_terms(std::move(terms));
}

Poly QuotientRing::nf_monomial(std::uint32_t b, std::uint32_t c) const {
    return to_poly(static_cast<int>(Monomial{b, c}.degree()), nf_bits(b, c));
}

Poly QuotientRing::nf(const Poly& p) const {
    Poly out;
    for (const auto& m : p)
        out += nf_monomial(m.b, m.c);
    return out;
}

std::shared_ptr<const QuotientRing> build_quotient(int n) { return std::make_shared<const QuotientRing>(n); }

Poly reduce_fast_path(const QuotientRing& q, std::uint32_t b, std::uint32_t c) {
    if (!q.profile())
        throw std::domain_error("reduce_fast_path: needs n >= 7");
    const auto& prof = *q.profile();
    const auto& gb = q.basis_gb();
    std::map<Monomial, Poly> memo;
    auto go = [&](auto&& self, const Monomial& m) -> Poly {
        if (auto it = memo.find(m); it != memo.end())
            return it->second;
        Poly out;
        if (auto i = last_divisor(gb, m)) {
            for (const auto& x : lemma_rewrite(prof, *i, m))
                out += self(self, x);
        } else {
            out = Poly(m);
        }
        memo.emplace(m, out);
        return out;
    };
    return go(go, Monomial{b, c});
}

Heights brute_heights(const QuotientRing& q) {
    Heights h;
    while (class_nonzero(q, static_cast<std::uint32_t>(h.h2 + 1), 0))
        ++h.h2;
    while (class_nonzero(q, 0, static_cast<std::uint32_t>(h.h3 + 1)))
        ++h.h3;
    return h;
}

Heights heights_closed_form(int n) {
    if (n < 7)
        throw std::domain_error("heights_closed_form: unsupported n = " + std::to_string(n) + " (need n >= 7)");
    const int t = t_of(n);
    Heights h;
    h.h3 = static_cast<int>(std::max(pow2(t - 1) - 2, n - pow2(t) - 1));
    if (n <= pow2(t) + pow2(t - 1)) {
        h.h2 = static_cast<int>(pow2(t) - 4);
        return h;
    }
    for (int s = 1; s <= t - 2; ++s) {
        if (pow2(t + 1) - pow2(s + 1) + 1 <= n && n <= pow2(t + 1) - pow2(s)) {
            h.h2 = static_cast<int>(pow2(t + 1) - 3 * pow2(s) - 1);
            return h;
        }
    }
    throw std::logic_error("heights_closed_form: no case matched n = " + std::to_string(n));
}

bool class_nonzero(const QuotientRing& q, std::uint32_t b, std::uint32_t c) { return any_bit(q.nf_bits(b, c)); }

std::vector<std::size_t> degree_counts(const QuotientRing& q) {
    std::vector<std::size_t> out;
    for (int d = 0; d <= q.max_degree(); ++d)
        out.push_back(q.basis_in_degree(d).size());
    return out;
}

Report classify_degree(const QuotientRing& q, int degree, const std::vector<Monomial>& expected,
                       const Monomial& representative) {
    Report report{"W_" + std::to_string(q.n()) + " degree " + std::to_string(degree), {}};
    std::vector<Monomial> nonzero;
    for (std::int64_t b = 0; 2 * b <= degree; ++b) {
        if ((degree - 2 * b) % 3 != 0)
            continue;
        const Monomial m = mono(b, (degree - 2 * b) / 3);
        if (class_nonzero(q, m.b, m.c))
            nonzero.push_back(m);
    }
    std::vector<Monomial> want = expected;
    std::sort(want.begin(), want.end());
    std::sort(nonzero.begin(), nonzero.end());

    std::string got_list;
    for (const auto& m : nonzero)
        got_list += to_string(m) + " ";
    report.add("nonzero monomials", nonzero == want, "got " + got_list);
    report.add(to_string(representative) + " in basis", q.in_basis(representative));
    const Poly rep(representative);
    for (const auto& m : want)
        report.add(to_string(m) + " == " + to_string(representative), q.nf_monomial(m.b, m.c) == rep,
                   "nf = " + to_string(q.nf_monomial(m.b, m.c)));
    return report;
}

Report verify_top_classes_low(int t) {
    const auto q = build_quotient(static_cast<int>(pow2(t) - 1));
    std::vector<Monomial> expected;
    for (int k = 2; k <= t - 1; ++k)
        expected.push_back(mono(pow2(t) - 3 * pow2(k - 1) - 1, pow2(k) - 3));
    return classify_degree(*q, static_cast<int>(pow2(t + 1) - 11), expected,
                           mono(pow2(t - 2) - 1, pow2(t - 1) - 3));
}

Report verify_top_classes_quarter(int t, int eps) {
    const auto q = build_quotient(static_cast<int>(pow2(t) + pow2(t - 2) + eps));
    std::vector<Monomial> expected;
    for (int k = 1; k <= t - 1; ++k)
        expected.push_back(mono(pow2(t) - 3 * pow2(k - 1) - 1, pow2(k) - 2));
    return classify_degree(*q, static_cast<int>(pow2(t + 1) - 8), expected, mono(pow2(t - 2) - 1, pow2(t - 1) - 2));
}

Report verify_top_classes_s(int t, int s) {
    const auto q = build_quotient(static_cast<int>(pow2(t + 1) - pow2(s + 1) + 1));
    std::vector<Monomial> expected;
    for (int k = s + 2; k <= t; ++k)
        expected.push_back(mono(pow2(t + 1) - 3 * pow2(k - 1) - 1, pow2(k) - pow2(s + 1) - 1));
    return classify_degree(*q, static_cast<int>(pow2(t + 2) - 3 * pow2(s + 1) - 5), expected,
                           mono(pow2(t - 1) - 1, pow2(t) - pow2(s + 1) - 1));
}

Report verify_cuplength_classes(int n) {
    Report report{"cup-length classes n=" + std::to_string(n), {}};
    const int t = t_of(n);
    const auto q = build_quotient(n);
    for (int s = 1; s <= t - 2; ++s) {
        if (pow2(t + 1) - pow2(s + 1) + 1 <= n && n <= pow2(t + 1) - pow2(s)) {
            const Monomial m = mono(pow2(t + 1) - 3 * pow2(s) - 1, n - pow2(t + 1) + pow2(s + 1) - 1);
            report.add("s=" + std::to_string(s) + " " + to_string(m) + " != 0", class_nonzero(*q, m.b, m.c));
        }
    }
    return report;
}

}  // namespace gzcl
