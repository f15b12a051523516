#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "gzcl/quotient.hpp"
#include "gzcl/report.hpp"

namespace gzcl {

using MonomialPair = std::pair<Monomial, Monomial>;

/// Element of W_n (x) W_n as a set of basis pairs e (x) f over GF(2).
class TensorElement {
public:
    explicit TensorElement(std::shared_ptr<const QuotientRing> ring) : ring_(std::move(ring)) {}
    /// Bilinear expansion of nf(x) (x) nf(y).
    static TensorElement simple(std::shared_ptr<const QuotientRing> ring, const Poly& x, const Poly& y);
    static TensorElement from_pairs(std::shared_ptr<const QuotientRing> ring, std::vector<MonomialPair> pairs);
    /// z(a) = a (x) 1 + 1 (x) a.
    static TensorElement z(std::shared_ptr<const QuotientRing> ring, const Poly& a);
    static TensorElement one(std::shared_ptr<const QuotientRing> ring);

    const QuotientRing& ring() const { return *ring_; }
    const std::shared_ptr<const QuotientRing>& ring_ptr() const { return ring_; }
    const std::vector<MonomialPair>& pairs() const { return pairs_; }
    bool is_zero() const { return pairs_.empty(); }
    std::size_t size() const { return pairs_.size(); }

    /// Image under (m1, m2) -> (m2, m1).
    TensorElement swapped() const;
    /// Component of bidegree (r, *).
    TensorElement left_degree(int r) const;

    TensorElement& operator+=(const TensorElement& other);
    friend TensorElement operator+(TensorElement x, const TensorElement& y) { return x += y; }
    friend TensorElement operator*(const TensorElement& x, const TensorElement& y);
    friend bool operator==(const TensorElement& x, const TensorElement& y) { return x.pairs_ == y.pairs_; }

private:
    std::shared_ptr<const QuotientRing> ring_;
    std::vector<MonomialPair> pairs_;  // sorted, unique
};

TensorElement pow(const TensorElement& x, std::uint64_t e);

struct GradedPiece {
    int r = 0;
    int beta = 0;
    int gamma = 0;
    TensorElement element;
};

/// Bidegree (r, 2beta+3gamma-r) component of z(w2)^beta z(w3)^gamma:
/// sum over 2b+3c=r of C(beta,b) C(gamma,c) w2^b w3^c (x) w2^{beta-b} w3^{gamma-c}.
/// Throws std::out_of_range unless 0 <= r <= 2beta+3gamma.
GradedPiece graded_piece(std::shared_ptr<const QuotientRing> q, int beta, int gamma, int r);

/// Same as !graded_piece(...).element.is_zero() without materializing pairs.
bool graded_piece_nonzero(const QuotientRing& q, int beta, int gamma, int r);

/// First r (scanning outward from the middle degree) with a nonzero piece.
std::optional<int> nonzero_piece_degree(const QuotientRing& q, int beta, int gamma);

bool zero_divisor_product_nonzero(const QuotientRing& q, int beta, int gamma);

/// height(z(a)) = 2^{u+1} - 1 when 2^u <= height(a) < 2^{u+1}.
int zero_divisor_height(int height);

struct ZclResult {
    int n = 0;
    int zcl = 0;
    int beta = 0;
    int gamma = 0;
    int r = 0;
    MonomialPair pair;  ///< one surviving basis pair of the witness piece
    int beta_cap = 0;
    int gamma_cap = 0;
};

/// Exact zcl(W_n): max beta+gamma with z(w2)^beta z(w3)^gamma != 0.
ZclResult zcl_wn(std::shared_ptr<const QuotientRing> q);
ZclResult zcl_wn(int n);

/// Seven-case closed form, n >= 15.
int zcl_closed_form(int n);

/// Known values for 6 <= n <= 14.
std::optional<int> zcl_small_n(int n);

/// Random homogeneous a, b: z(a+b) = z(a)+z(b), the product rule, and
/// z(a^{2^l}) = z(a)^{2^l} for l <= 3.
Report verify_zero_divisor_algebra(std::shared_ptr<const QuotientRing> q, int trials, std::uint64_t seed);

/// Vanishing of z(w2)^beta z(w3)^gamma at the upper-bound exponents for t.
Report verify_upper_bound_lemmas(int t);

}  // namespace gzcl
