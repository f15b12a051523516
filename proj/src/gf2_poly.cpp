#include "gzcl/gf2_poly.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace gzcl {

namespace {

std::uint32_t checked_add(std::uint32_t x, std::uint32_t y) {
    if (x > std::numeric_limits<std::uint32_t>::max() - y)
        throw std::overflow_error("monomial exponent overflow");
    return x + y;
}

// Sorts descending and cancels equal monomials pairwise.
void canonicalize(std::vector<Monomial>& terms) {
    std::sort(terms.begin(), terms.end(), std::greater<>());
    std::vector<Monomial> out;
    out.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) % 2 == 1)
            out.push_back(terms[i]);
        i = j;
    }
    terms = std::move(out);
}

void append_exponent(std::string& s, char var, std::uint32_t e) {
    s += "w";
    s += var;
    if (e != 1) {
        s += '^';
        s += std::to_string(e);
    }
}

}  // namespace

Monomial operator*(const Monomial& x, const Monomial& y) {
    return {checked_add(x.b, y.b), checked_add(x.c, y.c)};
}

Monomial operator/(const Monomial& m, const Monomial& d) {
    if (!divides(d, m))
        throw std::domain_error("monomial division: " + to_string(d) + " does not divide " + to_string(m));
    return {m.b - d.b, m.c - d.c};
}

std::string to_string(const Monomial& m) {
    if (m.b == 0 && m.c == 0)
        return "1";
    std::string s;
    if (m.b > 0)
        append_exponent(s, '2', m.b);
    if (m.c > 0) {
        if (!s.empty())
            s += '*';
        append_exponent(s, '3', m.c);
    }
    return s;
}

Poly::Poly(std::initializer_list<Monomial> terms) : terms_(terms) { canonicalize(terms_); }

Poly Poly::from_terms(std::vector<Monomial> terms) {
    Poly p;
    canonicalize(terms);
    p.terms_ = std::move(terms);
    return p;
}

bool Poly::contains(const Monomial& m) const {
    return std::binary_search(terms_.begin(), terms_.end(), m, std::greater<>());
}

bool Poly::is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Monomial& m) { return m.degree() == terms_.front().degree(); });
}

Poly& Poly::operator+=(const Poly& other) {
    std::vector<Monomial> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(out), std::greater<>());
    terms_ = std::move(out);
    return *this;
}

Poly& Poly::operator*=(const Poly& other) {
    *this = *this * other;
    return *this;
}

Poly operator+(const Poly& p, const Poly& q) {
    Poly r = p;
    r += q;
    return r;
}

Poly operator*(const Poly& p, const Poly& q) {
    std::vector<Monomial> terms;
    terms.reserve(p.size() * q.size());
    for (const auto& x : p)
        for (const auto& y : q)
            terms.push_back(x * y);
    return Poly::from_terms(std::move(terms));
}

Poly operator*(const Poly& p, const Monomial& m) {
    // Multiplying by a monomial preserves the order and distinctness of terms.
    std::vector<Monomial> terms;
    terms.reserve(p.size());
    for (const auto& x : p)
        terms.push_back(x * m);
    return Poly::from_terms(std::move(terms));
}

Poly pow(const Poly& p, std::uint64_t e) {
    Poly result = Poly::one();
    Poly base = p;
    while (e > 0) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

Monomial leading_monomial(const Poly& p) {
    if (p.is_zero())
        throw std::domain_error("no leading monomial");
    return p.terms().front();
}

int lucas_binom_mod2(std::int64_t a, std::int64_t k) {
    if (k < 0 || a < 0 || k > a)
        return 0;
    return (k & ~a) == 0 ? 1 : 0;
}

std::string to_string(const Poly& p) {
    if (p.is_zero())
        return "0";
    std::string s;
    for (const auto& m : p) {
        if (!s.empty())
            s += " + ";
        s += to_string(m);
    }
    return s;
}

}  // namespace gzcl
