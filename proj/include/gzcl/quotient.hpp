#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "gzcl/gf2_poly.hpp"
#include "gzcl/groebner.hpp"
#include "gzcl/report.hpp"

namespace gzcl {

/// Dense GF(2) coordinate vector over the additive basis of one degree.
using Bits = std::vector<std::uint64_t>;

inline bool any_bit(std::span<const std::uint64_t> v) {
    for (auto w : v)
        if (w)
            return true;
    return false;
}

struct Heights {
    int h2 = 0;  ///< height of w2
    int h3 = 0;  ///< height of w3
    friend bool operator==(const Heights&, const Heights&) = default;
};

/// W_n = Z2[w2, w3] / I_n with its monomial basis B_n.
///
/// Normal forms of every monomial of degree < 3n - 9 are computed once at
/// construction, degree by degree; the ring is immutable afterwards and can
/// be shared across threads.
class QuotientRing {
public:
    explicit QuotientRing(int n);

    int n() const { return n_; }
    const GroebnerBasis& basis_gb() const { return *gb_; }
    const std::optional<BinaryProfile>& profile() const { return profile_; }

    /// Largest degree that can carry a nonzero class (3n - 10).
    int max_degree() const { return max_degree_; }
    /// B_n restricted to degree d, sorted by decreasing lex order.
    const std::vector<Monomial>& basis_in_degree(int d) const;
    std::size_t dimension() const;
    bool in_basis(const Monomial& m) const;
    /// Position of a basis monomial inside basis_in_degree(m.degree()).
    std::optional<std::size_t> basis_index(const Monomial& m) const;

    /// Normal form of w2^b w3^c as coordinates over basis_in_degree(2b+3c).
    /// Empty span for degrees above max_degree().
    std::span<const std::uint64_t> nf_bits(std::uint32_t b, std::uint32_t c) const;
    Poly nf_monomial(std::uint32_t b, std::uint32_t c) const;
    Poly nf(const Poly& p) const;
    Poly to_poly(int degree, std::span<const std::uint64_t> bits) const;

private:
    std::size_t slot(std::uint32_t b, std::uint32_t c) const { return std::size_t{b} * (max_c_ + 1) + c; }

    int n_;
    std::shared_ptr<const GroebnerBasis> gb_;
    std::optional<BinaryProfile> profile_;
    int max_degree_;
    std::uint32_t max_b_ = 0;
    std::uint32_t max_c_ = 0;
    std::vector<std::vector<Monomial>> basis_;
    std::vector<Bits> nf_;
    std::vector<bool> has_nf_;
};

/// Constructs W_n (n >= 6). Throws std::logic_error if the staircase leaves
/// a basis monomial in degree >= 3n - 9.
std::shared_ptr<const QuotientRing> build_quotient(int n);

inline Poly nf_monomial(const QuotientRing& q, std::uint32_t b, std::uint32_t c) { return q.nf_monomial(b, c); }

/// Reduction of w2^b w3^c by repeated single-element rewrites
/// w2^b w3^c -> sum_{2d+3e=2l_i, e>0} C(d+e,e) w2^{b-2^i(l_i-d)} w3^{c+2^i e},
/// always with the largest i whose LM divides. Needs n >= 7.
Poly reduce_fast_path(const QuotientRing& q, std::uint32_t b, std::uint32_t c);

Heights brute_heights(const QuotientRing& q);
Heights heights_closed_form(int n);

bool class_nonzero(const QuotientRing& q, std::uint32_t b, std::uint32_t c);

/// Number of basis monomials in each degree 0..max_degree.
std::vector<std::size_t> degree_counts(const QuotientRing& q);

/// Nonzero monomials in one degree: asserts they are exactly `expected`, all
/// equal to the basis monomial `representative`.
Report classify_degree(const QuotientRing& q, int degree, const std::vector<Monomial>& expected,
                       const Monomial& representative);

/// Degree 2^{t+1}-11 of W_{2^t-1}.
Report verify_top_classes_low(int t);
/// Degree 2^{t+1}-8 of W_{2^t+2^{t-2}+eps}, eps in {1, 2}.
Report verify_top_classes_quarter(int t, int eps);
/// Degree 2^{t+2}-3*2^{s+1}-5 of W_{2^{t+1}-2^{s+1}+1}.
Report verify_top_classes_s(int t, int s);
/// w2^{2^{t+1}-3*2^s-1} w3^{n-2^{t+1}+2^{s+1}-1} != 0 on every admissible (t, s).
Report verify_cuplength_classes(int n);

}  // namespace gzcl
