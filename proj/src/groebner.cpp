#include "gzcl/groebner.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>

#include "gzcl/g_series.hpp"

namespace gzcl {

namespace {

std::int64_t pow2(int k) { return std::int64_t{1} << k; }

Monomial mono(std::int64_t b, std::int64_t c) {
    if (b < 0 || c < 0)
        throw std::domain_error("negative exponent");
    return {static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(c)};
}

Monomial lcm(const Monomial& x, const Monomial& y) { return {std::max(x.b, y.b), std::max(x.c, y.c)}; }

bool coprime(const Monomial& x, const Monomial& y) {
    return (x.b == 0 || y.b == 0) && (x.c == 0 || y.c == 0);
}

Poly g(std::int64_t r) { return g_recurrence(static_cast<std::size_t>(r)); }

Poly w3_pow(std::int64_t e) { return Poly(mono(0, e)); }

}  // namespace

Monomial BinaryProfile::predicted_lm(int i) const {
    const auto k = static_cast<std::size_t>(i);
    return mono(pow2(i) * l[k], alpha[k] * s_before(i) + pow2(i) - 1);
}

BinaryProfile binary_profile(int n) {
    if (n < 7)
        throw std::domain_error("binary_profile: unsupported n = " + std::to_string(n) + " (need n >= 7)");
    BinaryProfile p;
    p.n = n;
    p.t = 0;
    while (pow2(p.t + 1) - 1 <= n)
        ++p.t;
    const std::int64_t rest = n - pow2(p.t) + 1;
    std::int64_t acc = 0;
    for (int j = 0; j < p.t; ++j) {
        p.alpha.push_back(static_cast<int>((rest >> j) & 1));
        acc += p.alpha.back() * pow2(j);
        p.s.push_back(acc);
    }
    for (int i = 0; i < p.t; ++i) {
        std::int64_t li = pow2(p.t - 1 - i) - 1;
        for (int j = i + 1; j < p.t; ++j)
            li += p.alpha[static_cast<std::size_t>(j)] * pow2(j - i - 1);
        p.l.push_back(li);
        const std::int64_t twice = n + 1 - p.s[static_cast<std::size_t>(i)];
        if (twice % 2 != 0 || twice / 2 - pow2(i) != pow2(i) * li)
            throw std::logic_error("binary_profile: integrality check failed at n=" + std::to_string(n));
    }
    return p;
}

GroebnerBasis::GroebnerBasis(int n, std::vector<Poly> polys) : n_(n), polys_(std::move(polys)) {
    lms_.reserve(polys_.size());
    for (const auto& p : polys_)
        lms_.push_back(leading_monomial(p));
}

std::optional<std::size_t> GroebnerBasis::first_divisor(const Monomial& m) const {
    for (std::size_t i = 0; i < lms_.size(); ++i)
        if (divides(lms_[i], m))
            return i;
    return std::nullopt;
}

GroebnerBasis closed_form_basis(int n) {
    const BinaryProfile prof = binary_profile(n);
    std::vector<Poly> polys;
    for (int i = 0; i < prof.t; ++i) {
        const auto k = static_cast<std::size_t>(i);
        Poly f = g(n - 2 + pow2(i) - prof.s[k]) * mono(0, prof.alpha[k] * prof.s_before(i));
        if (f.is_zero() || leading_monomial(f) != prof.predicted_lm(i))
            throw std::logic_error("closed_form_basis: LM(f_" + std::to_string(i) + ") mismatch at n=" +
                                   std::to_string(n));
        polys.push_back(std::move(f));
    }
    return GroebnerBasis(n, std::move(polys));
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
    if (gb.size() == 0)
        throw std::invalid_argument("normal_form: empty basis");
    Poly work = p;
    std::vector<Monomial> irreducible;
    while (!work.is_zero()) {
        const Monomial m = work.terms().front();
        if (auto i = gb.first_divisor(m)) {
            work += gb[*i] * (m / gb.lms()[*i]);
        } else {
            irreducible.push_back(m);
            work += Poly(m);
        }
    }
    return Poly::from_terms(std::move(irreducible));
}

GroebnerBasis buchberger(const std::vector<Poly>& generators, int n) {
    std::vector<Poly> basis;
    for (const auto& p : generators)
        if (!p.is_zero())
            basis.push_back(p);
    if (basis.empty())
        throw std::invalid_argument("buchberger: all generators are zero");

    // Pending pairs keyed by lcm so the lex-smallest lcm is processed first.
    std::multimap<Monomial, std::pair<std::size_t, std::size_t>> pairs;
    auto add_pairs_for = [&](std::size_t j) {
        const Monomial lj = leading_monomial(basis[j]);
        for (std::size_t i = 0; i < j; ++i) {
            const Monomial li = leading_monomial(basis[i]);
            if (!coprime(li, lj))
                pairs.emplace(lcm(li, lj), std::make_pair(i, j));
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        add_pairs_for(j);

    while (!pairs.empty()) {
        auto it = pairs.begin();
        const Monomial l = it->first;
        const auto [i, j] = it->second;
        pairs.erase(it);
        const Poly spoly =
            basis[i] * (l / leading_monomial(basis[i])) + basis[j] * (l / leading_monomial(basis[j]));
        const Poly r = normal_form(spoly, GroebnerBasis(n, basis));
        if (!r.is_zero()) {
            basis.push_back(r);
            add_pairs_for(basis.size() - 1);
        }
    }
    return GroebnerBasis(n, std::move(basis));
}

GroebnerBasis reduce_basis(const GroebnerBasis& gb) {
    // Interreduce until stable: each element is replaced by its normal form
    // with respect to the others, and zeros are dropped. On a Groebner basis
    // this yields the reduced basis; it also tidies small non-bases such as
    // {w2, w2^2 + w3}.
    std::vector<Poly> polys;
    for (const auto& p : gb.polys())
        if (!p.is_zero())
            polys.push_back(p);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            std::vector<Poly> others;
            for (std::size_t j = 0; j < polys.size(); ++j)
                if (j != i)
                    others.push_back(polys[j]);
            if (others.empty())
                break;
            Poly r = normal_form(polys[i], GroebnerBasis(gb.n(), others));
            if (r == polys[i])
                continue;
            changed = true;
            if (r.is_zero()) {
                polys.erase(polys.begin() + static_cast<std::ptrdiff_t>(i));
                --i;
            } else {
                polys[i] = std::move(r);
            }
        }
    }
    std::sort(polys.begin(), polys.end(),
              [](const Poly& x, const Poly& y) { return leading_monomial(x) > leading_monomial(y); });
    return GroebnerBasis(gb.n(), std::move(polys));
}

std::vector<Poly> ideal_generators(int n) {
    if (n < 2)
        throw std::domain_error("ideal_generators: need n >= 2");
    return {g(n - 2), g(n - 1), g(n)};
}

std::shared_ptr<const GroebnerBasis> ideal_basis(int n) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const GroebnerBasis>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }
    auto gb = std::make_shared<const GroebnerBasis>(n >= 7 ? closed_form_basis(n)
                                                           : reduce_basis(buchberger(ideal_generators(n), n)));
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(gb)).first->second;
}

bool ideal_member(const Poly& p, int n) { return normal_form(p, *ideal_basis(n)).is_zero(); }

bool w3_ideal_member(const Poly& p, int n) {
    std::vector<Monomial> quotient;
    for (const auto& m : p) {
        if (m.c == 0)
            return false;
        quotient.push_back({m.b, m.c - 1});
    }
    return ideal_member(Poly::from_terms(std::move(quotient)), n);
}

Report verify_membership_lemmas(int t) {
    if (t < 3)
        throw std::invalid_argument("verify_membership_lemmas requires t >= 3");
    Report report{"membership lemmas t=" + std::to_string(t), {}};

    // sum_{k=1}^{t-3} w2^{3*2^{k-1}} w3^{2^{t-1}-2^k}
    Poly tail;
    for (int k = 1; k <= t - 3; ++k)
        tail += Poly(mono(3 * pow2(k - 1), pow2(t - 1) - pow2(k)));
    const Poly w2_power = Poly(mono(3 * pow2(t - 2), 0));

    report.add("w2^{3*2^{t-2}} congruence mod I_{2^t+2^{t-2}+2}",
               ideal_member(w2_power + tail, static_cast<int>(pow2(t) + pow2(t - 2) + 2)));
    if (t < 4)
        return report;

    const int n24 = static_cast<int>(pow2(t) + pow2(t - 2) + pow2(t - 4));
    report.add("g_{3*2^{t-1}} + ... in w3*I_" + std::to_string(n24),
               w3_ideal_member(g(3 * pow2(t - 1)) + w2_power + tail, n24));

    const Poly pair = Poly(mono(pow2(t) - 3, 0)) + Poly(mono(pow2(t - 2) - 3, pow2(t - 1)));
    const int n34 = static_cast<int>(pow2(t) + pow2(t - 1) + pow2(t - 3) + pow2(t - 4));
    report.add("g_{2^{t+1}-6} + ... in w3*I_" + std::to_string(n34), w3_ideal_member(g(pow2(t + 1) - 6) + pair, n34));
    report.add("w2^{2^t-3} congruence mod I_{13*2^{t-3}+1}", ideal_member(pair, static_cast<int>(13 * pow2(t - 3) + 1)));
    return report;
}

Report verify_ideal_chain(int n) {
    Report report{"ideal chain n=" + std::to_string(n), {}};
    bool down = true;
    for (const auto& p : ideal_generators(n + 1))
        down = down && ideal_member(p, n);
    report.add("I_{n+1} in I_n", down);
    bool shifted = true;
    for (const auto& p : ideal_generators(n))
        shifted = shifted && ideal_member(p * Monomial{0, 1}, n + 1);
    report.add("w3 I_n in I_{n+1}", shifted);
    return report;
}

Report verify_squaring_membership(int n, int trials, std::uint64_t seed) {
    Report report{"squaring membership n=" + std::to_string(n), {}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(0, 3);
    std::bernoulli_distribution coin(0.5);
    const auto gens = ideal_generators(n);
    for (int trial = 0; trial < trials; ++trial) {
        Poly combo;
        for (const auto& gen : gens) {
            Poly q;
            for (int k = 0; k < 3; ++k)
                if (coin(rng))
                    q += Poly(mono(small(rng), small(rng)));
            combo += q * gen;
        }
        const Poly f = combo * Monomial{0, 1};
        const Poly sq = f * f;
        const std::string label = "trial " + std::to_string(trial);
        report.add(label + " in w3*I_{2n+1}", w3_ideal_member(sq, 2 * n + 1), "f = " + to_string(f));
        report.add(label + " in w3*I_{2n}", w3_ideal_member(sq, 2 * n), "f = " + to_string(f));
    }
    return report;
}

Report verify_case_bases(int t) {
    if (t < 4)
        throw std::invalid_argument("verify_case_bases requires t >= 4");
    Report report{"case bases t=" + std::to_string(t), {}};
    auto expect = [&](const std::string& where, const GroebnerBasis& gb, int i, const Poly& f,
                      std::optional<Monomial> lm = std::nullopt) {
        const Poly& got = gb[static_cast<std::size_t>(i)];
        report.add(where + " f_" + std::to_string(i), got == f, "expected " + to_string(f) + ", got " + to_string(got));
        if (lm)
            report.add(where + " LM(f_" + std::to_string(i) + ")", gb.lms()[static_cast<std::size_t>(i)] == *lm,
                       "expected " + to_string(*lm) + ", got " + to_string(gb.lms()[static_cast<std::size_t>(i)]));
    };
    const auto P = [](std::int64_t b, std::int64_t c) { return Poly(mono(b, c)); };
    // w3^{2^i-1} (g_r)^{2^i}
    const auto squared = [](int i, std::int64_t r) { return pow(g(r), static_cast<std::uint64_t>(pow2(i))) * mono(0, pow2(i) - 1); };

    {
        const int n = static_cast<int>(pow2(t) - 1);
        const auto gb = closed_form_basis(n);
        for (int i = 0; i < t; ++i)
            expect("n=2^t-1", gb, i, g(pow2(t) + pow2(i) - 3), mono(pow2(t - 1) - pow2(i), pow2(i) - 1));
    }
    for (int eps = 0; eps <= 1; ++eps) {
        const int n = static_cast<int>(pow2(t) + pow2(t - 2) + eps);
        const std::string where = "n=2^t+2^{t-2}+" + std::to_string(eps);
        const auto gb = closed_form_basis(n);
        expect(where, gb, 0, g(pow2(t) + pow2(t - 2) + 2 * eps - 2), mono(pow2(t - 1) + pow2(t - 3) + eps - 1, 0));
        for (int i = 1; i <= t - 3; ++i)
            expect(where, gb, i, squared(i, pow2(t - i) + pow2(t - i - 2) - 2),
                   mono(pow2(t - 1) + pow2(t - 3) - pow2(i), pow2(i) - 1));
        expect(where, gb, t - 3, P(pow2(t - 1), pow2(t - 3) - 1) + P(pow2(t - 3), pow2(t - 2) + pow2(t - 3) - 1));
        expect(where, gb, t - 2, P(pow2(t - 2), pow2(t - 2) + eps));
        expect(where, gb, t - 1, P(0, pow2(t - 1) - 1));
    }
    {
        const int n = static_cast<int>(pow2(t) + pow2(t - 2) + 2);
        const std::string where = "n=2^t+2^{t-2}+2";
        const auto gb = closed_form_basis(n);
        expect(where, gb, 0, g(pow2(t) + pow2(t - 2)), mono(pow2(t - 1) + pow2(t - 3), 0));
        expect(where, gb, 1, pow(g(pow2(t - 1) + pow2(t - 3) - 2), 2) * mono(0, 2),
               mono(pow2(t - 1) + pow2(t - 3) - 2, 2));
        for (int i = 2; i <= t - 3; ++i)
            expect(where, gb, i, squared(i, pow2(t - i) + pow2(t - i - 2) - 2),
                   mono(pow2(t - 1) + pow2(t - 3) - pow2(i), pow2(i) - 1));
        if (t == 4)
            expect(where, gb, t - 3, P(8, 2) + P(2, 6));
        else
            expect(where, gb, t - 3, P(pow2(t - 1), pow2(t - 3) - 1) + P(pow2(t - 3), pow2(t - 2) + pow2(t - 3) - 1));
        expect(where, gb, t - 2, P(pow2(t - 2), pow2(t - 2) + 2));
        expect(where, gb, t - 1, P(0, pow2(t - 1) - 1));
    }
    {
        const int n = static_cast<int>(pow2(t) + pow2(t - 1) + 1);
        const std::string where = "n=2^t+2^{t-1}+1";
        const auto gb = closed_form_basis(n);
        expect(where, gb, 0, g(pow2(t) + pow2(t - 1)), mono(pow2(t - 1) + pow2(t - 2), 0));
        for (int i = 1; i <= t - 2; ++i)
            expect(where, gb, i, squared(i, pow2(t - i) + pow2(t - 1 - i) - 2),
                   mono(pow2(t - 1) + pow2(t - 2) - pow2(i), pow2(i) - 1));
        expect(where, gb, t - 2, P(pow2(t - 1), pow2(t - 2) - 1));
        expect(where, gb, t - 1, P(0, pow2(t - 1) + 1));
    }
    for (int s = 1; s <= t - 3; ++s) {
        const int n = static_cast<int>(pow2(t + 1) - pow2(s + 1) + 1);
        const std::string where = "n=2^{t+1}-2^{s+1}+1 (s=" + std::to_string(s) + ")";
        const auto gb = closed_form_basis(n);
        expect(where, gb, 0, g(pow2(t + 1) - pow2(s + 1)), mono(pow2(t) - pow2(s), 0));
        for (int i = 1; i <= s; ++i)
            expect(where, gb, i, squared(i, pow2(t + 1 - i) - pow2(s + 1 - i) - 2),
                   mono(pow2(t) - pow2(s) - pow2(i), pow2(i) - 1));
        for (int i = s + 1; i <= t - 1; ++i)
            expect(where, gb, i,
                   pow(g(pow2(t + 1 - i) - 4), static_cast<std::uint64_t>(pow2(i))) *
                       mono(0, pow2(i + 1) - pow2(s + 1) + 1),
                   mono(pow2(t) - pow2(i + 1), pow2(i + 1) - pow2(s + 1) + 1));
        expect(where, gb, t - 2, P(pow2(t - 1), pow2(t - 1) - pow2(s + 1) + 1));
        expect(where, gb, t - 1, P(0, pow2(t) - pow2(s + 1) + 1));
    }
    for (int s = 1; s <= t - 3; ++s) {
        const int n = static_cast<int>(pow2(t + 1) - pow2(s));
        const std::string where = "W_{2^{t+1}-2^s} (s=" + std::to_string(s) + ")";
        report.add(where + " relation (a)",
                   ideal_member(P(pow2(t - 1) + pow2(t - 2), pow2(t - 2) - pow2(s)) +
                                    w3_pow(pow2(t - 1) + pow2(t - 2) - pow2(s)),
                                n));
        report.add(where + " relation (b)", ideal_member(P(pow2(t - 1), pow2(t - 1) - pow2(s)), n));
        report.add(where + " relation (c)", ideal_member(w3_pow(pow2(t) - pow2(s)), n));
    }
    return report;
}

}  // namespace gzcl
