#include "gzcl/g_series.hpp"

#include <mutex>
#include <stdexcept>

namespace gzcl {

namespace {

void check_homogeneous(const Poly& p, std::size_t r) {
    for (const auto& m : p)
        if (m.degree() != r)
            throw std::logic_error("g_" + std::to_string(r) + " has a term of degree " + std::to_string(m.degree()));
}

std::size_t pow2(int k) { return std::size_t{1} << k; }

}  // namespace

GSeries::GSeries() : cache_{Poly::one(), Poly{}, w2()} {}

const Poly& GSeries::operator()(std::size_t r) {
    while (cache_.size() <= r) {
        const std::size_t k = cache_.size();  // k = r' + 3
        Poly next = cache_[k - 2] * Monomial{1, 0} + cache_[k - 3] * Monomial{0, 1};
        check_homogeneous(next, k);
        cache_.push_back(std::move(next));
    }
    return cache_[r];
}

std::vector<Poly> GSeries::up_to(std::size_t r) {
    (*this)(r);
    return {cache_.begin(), cache_.begin() + static_cast<std::ptrdiff_t>(r + 1)};
}

Poly g_recurrence(std::size_t r) {
    static GSeries series;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    return series(r);
}

Poly g_explicit(std::size_t r) {
    std::vector<Monomial> terms;
    for (std::size_t e = r % 2; 3 * e <= r; e += 2) {
        const std::size_t d = (r - 3 * e) / 2;
        if (lucas_binom_mod2(static_cast<std::int64_t>(d + e), static_cast<std::int64_t>(e)))
            terms.push_back({static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(e)});
    }
    return Poly::from_terms(std::move(terms));
}

Report verify_g_closed_forms(int t) {
    if (t < 2)
        throw std::invalid_argument("verify_g_closed_forms requires t >= 2");
    Report report{"g-3 lemma t=" + std::to_string(t), {}};
    auto check = [&](const char* part, std::size_t r, const Poly& expected) {
        const Poly got = g_recurrence(r);
        report.add(std::string("(") + part + ") g_" + std::to_string(r), got == expected,
                   "expected " + to_string(expected) + ", got " + to_string(got));
    };
    const auto mono = [](std::size_t b, std::size_t c) {
        return Poly(Monomial{static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(c)});
    };
    check("a", pow2(t) - 3, Poly{});
    check("b", pow2(t) + pow2(t - 1) - 3, mono(0, pow2(t - 1) - 1));
    check("c", pow2(t) + pow2(t - 2) - 3, mono(pow2(t - 2), pow2(t - 2) - 1));
    check("d", pow2(t) + pow2(t - 1) + pow2(t - 2) - 3, mono(pow2(t - 1), pow2(t - 2) - 1));
    if (t >= 3)
        check("e", pow2(t) + pow2(t - 1) + pow2(t - 3) - 3, mono(pow2(t - 1) + pow2(t - 3), pow2(t - 3) - 1));
    return report;
}

bool verify_squaring_identity(int i, std::size_t r) {
    const std::size_t q = pow2(i);
    const Poly lhs = g_recurrence(q * (r + 3) - 3);
    const Poly rhs = pow(g_recurrence(r), q) * Monomial{0, static_cast<std::uint32_t>(q - 1)};
    return lhs == rhs;
}

bool verify_doubling(std::size_t n) {
    if (n < 1)
        throw std::invalid_argument("verify_doubling requires n >= 1");
    const Poly gn = g_recurrence(n);
    const Poly gm = g_recurrence(n - 1);
    return g_recurrence(2 * n) == gn * gn + (gm * gm) * Monomial{1, 0};
}

}  // namespace gzcl
