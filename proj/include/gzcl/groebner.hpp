#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "gzcl/gf2_poly.hpp"
#include "gzcl/report.hpp"

namespace gzcl {

/// Binary data attached to n with 2^t - 1 <= n < 2^{t+1} - 1:
/// alpha = bits of n - 2^t + 1, s_i = sum_{j<=i} alpha_j 2^j,
/// l_i = 2^{t-1-i} + sum_{j>i} alpha_j 2^{j-i-1} - 1.
struct BinaryProfile {
    int n = 0;
    int t = 0;
    std::vector<int> alpha;
    std::vector<std::int64_t> s;  // s[i] for 0 <= i < t
    std::vector<std::int64_t> l;

    std::int64_t s_before(int i) const { return i == 0 ? 0 : s[static_cast<std::size_t>(i - 1)]; }
    /// Predicted leading monomial of f_i.
    Monomial predicted_lm(int i) const;
};

BinaryProfile binary_profile(int n);

/// An ordered generating set together with its cached leading monomials.
class GroebnerBasis {
public:
    GroebnerBasis() = default;
    GroebnerBasis(int n, std::vector<Poly> polys);

    int n() const { return n_; }
    const std::vector<Poly>& polys() const { return polys_; }
    const std::vector<Monomial>& lms() const { return lms_; }
    std::size_t size() const { return polys_.size(); }
    const Poly& operator[](std::size_t i) const { return polys_[i]; }

    /// Index of the first basis element whose LM divides m.
    std::optional<std::size_t> first_divisor(const Monomial& m) const;

    friend bool operator==(const GroebnerBasis& x, const GroebnerBasis& y) { return x.polys_ == y.polys_; }

private:
    int n_ = 0;
    std::vector<Poly> polys_;
    std::vector<Monomial> lms_;
};

/// F_n = {f_0, ..., f_{t-1}}, f_i = w3^{alpha_i s_{i-1}} g_{n-2+2^i-s_i}, n >= 7.
/// Throws std::logic_error if some LM(f_i) disagrees with the predicted one.
GroebnerBasis closed_form_basis(int n);

/// Full reduction: repeatedly rewrites the lex-greatest reducible monomial
/// by the lowest-index basis element whose LM divides it.
Poly normal_form(const Poly& p, const GroebnerBasis& gb);

/// Textbook Buchberger: S-pairs picked by lex-smallest lcm, product
/// criterion as the only pair filter. The result is a Groebner basis, not
/// necessarily reduced.
GroebnerBasis buchberger(const std::vector<Poly>& generators, int n = 0);

/// Minimal, inter-reduced basis sorted by decreasing LM.
GroebnerBasis reduce_basis(const GroebnerBasis& gb);

/// Groebner basis of I_n = (g_{n-2}, g_{n-1}, g_n): closed form for n >= 7,
/// reduced Buchberger basis for 2 <= n <= 6. Memoized, thread-safe.
std::shared_ptr<const GroebnerBasis> ideal_basis(int n);

std::vector<Poly> ideal_generators(int n);

bool ideal_member(const Poly& p, int n);

/// p in w3*I_n = {w3 q : q in I_n}.
bool w3_ideal_member(const Poly& p, int n);

/// The two membership lemmas and their corollaries at parameter t
/// (t = 3 runs only the w2^{3*2^{t-2}} corollary).
Report verify_membership_lemmas(int t);

/// I_{n+1} subset I_n and w3 I_n subset I_{n+1}, checked on generators.
Report verify_ideal_chain(int n);

/// Random f in w3*I_n: checks f^2 in w3*I_{2n+1} and f^2 in w3*I_{2n}.
Report verify_squaring_membership(int n, int trials, std::uint64_t seed);

/// Explicit per-case descriptions of F_n (and three relations in
/// W_{2^{t+1}-2^s}) compared against closed_form_basis, for one t >= 4.
Report verify_case_bases(int t);

}  // namespace gzcl
