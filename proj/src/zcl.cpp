#include "gzcl/zcl.hpp"

#include <algorithm>
#include <random>
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

void canonicalize(std::vector<MonomialPair>& pairs) {
    std::sort(pairs.begin(), pairs.end());
    std::vector<MonomialPair> out;
    out.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size();) {
        std::size_t j = i;
        while (j < pairs.size() && pairs[j] == pairs[i])
            ++j;
        if ((j - i) % 2 == 1)
            out.push_back(pairs[i]);
        i = j;
    }
    pairs = std::move(out);
}

// Dense GF(2) matrix for one bidegree of W_n (x) W_n.
class PieceMatrix {
public:
    PieceMatrix(const QuotientRing& q, int left, int right)
        : rows_(q.basis_in_degree(left).size()),
          words_((q.basis_in_degree(right).size() + 63) / 64),
          data_(rows_ * words_, 0) {}

    bool trivially_zero() const { return rows_ == 0 || words_ == 0; }

    void add_outer(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y) {
        for (std::size_t wi = 0; wi < x.size(); ++wi) {
            for (std::uint64_t word = x[wi]; word; word &= word - 1) {
                const std::size_t row = wi * 64 + static_cast<std::size_t>(__builtin_ctzll(word));
                std::uint64_t* dst = data_.data() + row * words_;
                for (std::size_t k = 0; k < words_; ++k)
                    dst[k] ^= y[k];
            }
        }
    }

    bool nonzero() const { return any_bit(data_); }

    bool bit(std::size_t row, std::size_t col) const { return (data_[row * words_ + col / 64] >> (col % 64)) & 1u; }
    std::size_t rows() const { return rows_; }

private:
    std::size_t rows_;
    std::size_t words_;
    std::vector<std::uint64_t> data_;
};

// Accumulates the bidegree-(r, 2beta+3gamma-r) piece; returns nullopt when
// the bidegree has no basis on one side.
std::optional<PieceMatrix> accumulate_piece(const QuotientRing& q, int beta, int gamma, int r) {
    const int total = 2 * beta + 3 * gamma;
    PieceMatrix mat(q, r, total - r);
    if (mat.trivially_zero())
        return std::nullopt;
    for (int c = r % 2; c <= gamma && 3 * c <= r; c += 2) {
        const int b = (r - 3 * c) / 2;
        if (b > beta || !lucas_binom_mod2(beta, b) || !lucas_binom_mod2(gamma, c))
            continue;
        const auto left = q.nf_bits(static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(c));
        if (!any_bit(left))
            continue;
        const auto right = q.nf_bits(static_cast<std::uint32_t>(beta - b), static_cast<std::uint32_t>(gamma - c));
        if (!any_bit(right))
            continue;
        mat.add_outer(left, right);
    }
    return mat;
}

std::vector<int> middle_out(int total) {
    std::vector<int> order;
    const int mid = total / 2;
    order.push_back(mid);
    for (int k = 1; mid - k >= 0 || mid + k <= total; ++k) {
        if (mid + k <= total)
            order.push_back(mid + k);
        if (mid - k >= 0)
            order.push_back(mid - k);
    }
    return order;
}

}  // namespace

TensorElement TensorElement::from_pairs(std::shared_ptr<const QuotientRing> ring, std::vector<MonomialPair> pairs) {
    for (const auto& [x, y] : pairs)
        if (!ring->in_basis(x) || !ring->in_basis(y))
            throw std::invalid_argument("TensorElement: pair coordinates must be basis monomials");
    TensorElement out(std::move(ring));
    canonicalize(pairs);
    out.pairs_ = std::move(pairs);
    return out;
}

TensorElement TensorElement::simple(std::shared_ptr<const QuotientRing> ring, const Poly& x, const Poly& y) {
    const Poly nx = ring->nf(x);
    const Poly ny = ring->nf(y);
    std::vector<MonomialPair> pairs;
    for (const auto& a : nx)
        for (const auto& b : ny)
            pairs.emplace_back(a, b);
    TensorElement out(std::move(ring));
    canonicalize(pairs);
    out.pairs_ = std::move(pairs);
    return out;
}

TensorElement TensorElement::z(std::shared_ptr<const QuotientRing> ring, const Poly& a) {
    return simple(ring, a, Poly::one()) + simple(ring, Poly::one(), a);
}

TensorElement TensorElement::one(std::shared_ptr<const QuotientRing> ring) {
    return simple(ring, Poly::one(), Poly::one());
}

TensorElement TensorElement::swapped() const {
    std::vector<MonomialPair> pairs;
    for (const auto& [x, y] : pairs_)
        pairs.emplace_back(y, x);
    TensorElement out(ring_);
    std::sort(pairs.begin(), pairs.end());
    out.pairs_ = std::move(pairs);
    return out;
}

TensorElement TensorElement::left_degree(int r) const {
    TensorElement out(ring_);
    for (const auto& p : pairs_)
        if (p.first.degree() == static_cast<std::uint64_t>(r))
            out.pairs_.push_back(p);
    return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
    std::vector<MonomialPair> out;
    std::set_symmetric_difference(pairs_.begin(), pairs_.end(), other.pairs_.begin(), other.pairs_.end(),
                                  std::back_inserter(out));
    pairs_ = std::move(out);
    return *this;
}

TensorElement operator*(const TensorElement& x, const TensorElement& y) {
    const auto& q = *x.ring_;
    std::vector<MonomialPair> pairs;
    for (const auto& [x1, x2] : x.pairs_) {
        for (const auto& [y1, y2] : y.pairs_) {
            const Poly left = q.nf_monomial(x1.b + y1.b, x1.c + y1.c);
            if (left.is_zero())
                continue;
            const Poly right = q.nf_monomial(x2.b + y2.b, x2.c + y2.c);
            for (const auto& a : left)
                for (const auto& b : right)
                    pairs.emplace_back(a, b);
        }
    }
    TensorElement out(x.ring_);
    canonicalize(pairs);
    out.pairs_ = std::move(pairs);
    return out;
}

TensorElement pow(const TensorElement& x, std::uint64_t e) {
    TensorElement result = TensorElement::one(x.ring_ptr());
    TensorElement base = x;
    while (e > 0) {
        if (e & 1u)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

GradedPiece graded_piece(std::shared_ptr<const QuotientRing> q, int beta, int gamma, int r) {
    if (beta < 0 || gamma < 0 || r < 0 || r > 2 * beta + 3 * gamma)
        throw std::out_of_range("graded_piece: r outside [0, 2beta+3gamma]");
    GradedPiece piece{r, beta, gamma, TensorElement(q)};
    const auto mat = accumulate_piece(*q, beta, gamma, r);
    if (!mat)
        return piece;
    const auto& left = q->basis_in_degree(r);
    const auto& right = q->basis_in_degree(2 * beta + 3 * gamma - r);
    std::vector<MonomialPair> pairs;
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            if (mat->bit(i, j))
                pairs.emplace_back(left[i], right[j]);
    piece.element = TensorElement::from_pairs(std::move(q), std::move(pairs));
    return piece;
}

bool graded_piece_nonzero(const QuotientRing& q, int beta, int gamma, int r) {
    const auto mat = accumulate_piece(q, beta, gamma, r);
    return mat && mat->nonzero();
}

std::optional<int> nonzero_piece_degree(const QuotientRing& q, int beta, int gamma) {
    if (beta < 0 || gamma < 0)
        throw std::invalid_argument("zero-divisor exponents must be nonnegative");
    const int total = 2 * beta + 3 * gamma;
    for (int r : middle_out(total)) {
        if (r > q.max_degree() || total - r > q.max_degree())
            continue;
        if (graded_piece_nonzero(q, beta, gamma, r))
            return r;
    }
    return std::nullopt;
}

bool zero_divisor_product_nonzero(const QuotientRing& q, int beta, int gamma) {
    return nonzero_piece_degree(q, beta, gamma).has_value();
}

int zero_divisor_height(int height) {
    if (height < 1)
        throw std::invalid_argument("zero_divisor_height: height must be >= 1");
    int u = 0;
    while ((2 << u) <= height)
        ++u;
    return (2 << u) - 1;
}

ZclResult zcl_wn(std::shared_ptr<const QuotientRing> q) {
    const Heights h = brute_heights(*q);
    ZclResult res;
    res.n = q->n();
    res.beta_cap = zero_divisor_height(h.h2);
    res.gamma_cap = zero_divisor_height(h.h3);
    if (zero_divisor_product_nonzero(*q, res.beta_cap + 1, 0) || zero_divisor_product_nonzero(*q, 0, res.gamma_cap + 1))
        throw std::logic_error("zcl_wn: zero-divisor height cap violated at n=" + std::to_string(res.n));

    // Staircase walk: the largest nonvanishing beta is nonincreasing in gamma.
    int best = -1;
    int beta = res.beta_cap;
    for (int gamma = 0; gamma <= res.gamma_cap && beta >= 0; ++gamma) {
        while (beta >= 0 && !zero_divisor_product_nonzero(*q, beta, gamma))
            --beta;
        if (beta >= 0 && beta + gamma > best) {
            best = beta + gamma;
            res.beta = beta;
            res.gamma = gamma;
        }
    }
    res.zcl = best;
    res.r = *nonzero_piece_degree(*q, res.beta, res.gamma);
    res.pair = graded_piece(q, res.beta, res.gamma, res.r).element.pairs().front();
    return res;
}

ZclResult zcl_wn(int n) { return zcl_wn(build_quotient(n)); }

int zcl_closed_form(int n) {
    if (n < 15)
        throw std::domain_error("zcl_closed_form: unsupported n = " + std::to_string(n) + " (need n >= 15)");
    const int t = t_of(n);
    const auto P = [](int k) { return pow2(k); };
    std::int64_t v = 0;
    if (n <= P(t) + P(t - 2))
        v = P(t) + P(t - 1) - 4;
    else if (n == P(t) + P(t - 2) + 1)
        v = P(t) + P(t - 1) - 3;
    else if (n <= P(t) + P(t - 1))
        v = P(t) + P(t - 1) - 2;
    else if (n == P(t) + P(t - 1) + 1)
        v = P(t + 1) + P(t - 3) - 3;
    else if (n <= 13 * P(t - 3))
        v = P(t + 1) + P(t - 3) - 2;
    else if (n <= P(t) + P(t - 1) + P(t - 2))
        v = P(t + 1) + P(t - 2) - 2;
    else {
        for (int s = 1; s <= t - 3; ++s)
            if (P(t + 1) - P(s + 1) + 1 <= n && n <= P(t + 1) - P(s))
                v = 3 * P(t) - P(s + 1) - 2;
        if (v == 0)
            throw std::logic_error("zcl_closed_form: no case matched n = " + std::to_string(n));
    }
    return static_cast<int>(v);
}

std::optional<int> zcl_small_n(int n) {
    static constexpr int table[] = {2, 7, 7, 7, 8, 9, 10, 15, 16};
    if (n < 6 || n > 14)
        return std::nullopt;
    return table[n - 6];
}

Report verify_zero_divisor_algebra(std::shared_ptr<const QuotientRing> q, int trials, std::uint64_t seed) {
    if (trials < 1)
        throw std::invalid_argument("verify_zero_divisor_algebra: trials must be >= 1");
    Report report{"zero-divisor algebra n=" + std::to_string(q->n()), {}};
    std::mt19937_64 rng(seed);
    const int top = std::min(q->max_degree(), 14);
    std::uniform_int_distribution<int> degree(2, std::max(2, top / 2));
    auto random_element = [&]() {
        for (;;) {
            const int d = degree(rng);
            const auto& basis = q->basis_in_degree(d);
            if (basis.empty())
                continue;
            std::vector<Monomial> terms;
            std::bernoulli_distribution coin(0.5);
            for (const auto& m : basis)
                if (coin(rng))
                    terms.push_back(m);
            if (terms.empty())
                terms.push_back(basis.front());
            return Poly::from_terms(std::move(terms));
        }
    };
    const auto z = [&](const Poly& a) { return TensorElement::z(q, a); };
    const auto left_one = [&](const Poly& a) { return TensorElement::simple(q, Poly::one(), a); };
    for (int trial = 0; trial < trials; ++trial) {
        const Poly a = random_element();
        const Poly b = random_element();
        const std::string ctx = "a = " + to_string(a) + ", b = " + to_string(b);
        report.add("z(a+b) trial " + std::to_string(trial), z(a + b) == z(a) + z(b), ctx);
        report.add("z(ab) trial " + std::to_string(trial),
                   z(a * b) == z(a) * z(b) + left_one(b) * z(a) + left_one(a) * z(b), ctx);
        Poly power = a;
        for (int l = 1; l <= 3; ++l) {
            power = power * power;
            report.add("z(a^2^" + std::to_string(l) + ") trial " + std::to_string(trial),
                       z(power) == pow(z(a), std::uint64_t{1} << l), ctx);
        }
    }
    return report;
}

Report verify_upper_bound_lemmas(int t) {
    if (t < 4)
        throw std::invalid_argument("verify_upper_bound_lemmas requires t >= 4");
    Report report{"upper-bound vanishing t=" + std::to_string(t), {}};
    const auto vanish = [&](int n, std::int64_t beta, std::int64_t gamma) {
        const auto q = build_quotient(n);
        report.add("n=" + std::to_string(n) + " z2^" + std::to_string(beta) + " z3^" + std::to_string(gamma) + " = 0",
                   !zero_divisor_product_nonzero(*q, static_cast<int>(beta), static_cast<int>(gamma)));
    };
    const int n0 = static_cast<int>(pow2(t) + pow2(t - 2));
    vanish(n0, pow2(t) - 1, pow2(t - 1) - 2);
    vanish(n0, pow2(t) - 2, pow2(t - 1) - 1);
    vanish(n0 + 1, pow2(t) - 1, pow2(t - 1) - 1);
    for (int s = 1; s <= t - 3; ++s) {
        const int n = static_cast<int>(pow2(t + 1) - pow2(s));
        vanish(n, pow2(t + 1) - pow2(s + 1), pow2(t) - pow2(s));
        vanish(n, pow2(t + 1) - pow2(s), pow2(t) - pow2(s + 1));
    }
    return report;
}

}  // namespace gzcl
