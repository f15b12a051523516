#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gzcl {

/// The monomial w2^b * w3^c. Graded degree is 2b + 3c.
struct Monomial {
    std::uint32_t b = 0;
    std::uint32_t c = 0;

    constexpr std::uint64_t degree() const { return 2ull * b + 3ull * c; }

    // Lex order with w2 > w3: compare b first, then c.
    friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// d | m in the monomial lattice.
constexpr bool divides(const Monomial& d, const Monomial& m) { return d.b <= m.b && d.c <= m.c; }

/// Exponent-wise product; throws std::overflow_error instead of wrapping.
Monomial operator*(const Monomial& x, const Monomial& y);

/// m / d, requires divides(d, m).
Monomial operator/(const Monomial& m, const Monomial& d);

std::string to_string(const Monomial& m);

/// Polynomial over GF(2) in w2, w3: a set of monomials kept sorted in
/// strictly decreasing lex order, so equality is plain sequence equality.
class Poly {
public:
    Poly() = default;
    Poly(Monomial m) : terms_{m} {}  // NOLINT(google-explicit-constructor)
    Poly(std::initializer_list<Monomial> terms);

    /// Builds from arbitrary terms; repeated monomials cancel in pairs.
    static Poly from_terms(std::vector<Monomial> terms);
    static Poly one() { return Poly(Monomial{0, 0}); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Monomial>& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    bool contains(const Monomial& m) const;

    /// True when every term has the same degree (the zero polynomial counts).
    bool is_homogeneous() const;

    Poly& operator+=(const Poly& other);
    Poly& operator*=(const Poly& other);

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    std::vector<Monomial> terms_;
};

Poly operator+(const Poly& p, const Poly& q);
Poly operator*(const Poly& p, const Poly& q);
Poly operator*(const Poly& p, const Monomial& m);

inline Poly add(const Poly& p, const Poly& q) { return p + q; }
inline Poly mul(const Poly& p, const Poly& q) { return p * q; }

/// p^e by repeated squaring; pow(p, 0) = 1.
Poly pow(const Poly& p, std::uint64_t e);

/// Lex-greatest monomial; throws std::domain_error("no leading monomial") on 0.
Monomial leading_monomial(const Poly& p);

/// C(a, k) mod 2 via Lucas: 1 iff 0 <= k <= a and k's bits are a submask of a's.
int lucas_binom_mod2(std::int64_t a, std::int64_t k);

/// Canonical rendering, e.g. "w2^3 + w3^2", "w2*w3", "1", "0".
std::string to_string(const Poly& p);

inline Poly w2() { return Poly(Monomial{1, 0}); }
inline Poly w3() { return Poly(Monomial{0, 1}); }

}  // namespace gzcl
