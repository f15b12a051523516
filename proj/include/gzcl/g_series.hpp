#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gzcl/gf2_poly.hpp"
#include "gzcl/report.hpp"

namespace gzcl {

/// Memoized g_r, the degree-r coefficients of 1/(1 + w2 + w3).
///
/// Seeds g_0 = 1, g_1 = 0, g_2 = w2 and g_{r+3} = w2*g_{r+1} + w3*g_r.
/// The cache is append-only; concurrent use needs external synchronization
/// (or a snapshot via `up_to`).
class GSeries {
public:
    GSeries();

    const Poly& operator()(std::size_t r);
    std::vector<Poly> up_to(std::size_t r);
    std::size_t cached() const { return cache_.size(); }

private:
    std::vector<Poly> cache_;
};

/// g_r via the recurrence, using a process-wide cache.
Poly g_recurrence(std::size_t r);

/// g_r = sum over 2d + 3e = r of C(d+e, e) w2^d w3^e (mod 2). Cache-free.
Poly g_explicit(std::size_t r);

/// Parts (a)-(e) of the closed forms for g at 2^t-3, 2^t+2^{t-1}-3,
/// 2^t+2^{t-2}-3, 2^t+2^{t-1}+2^{t-2}-3 and 2^t+2^{t-1}+2^{t-3}-3.
/// Part (e) is only checked for t >= 3.
Report verify_g_closed_forms(int t);

/// g_{2^i(r+3)-3} == w3^{2^i-1} g_r^{2^i}.
bool verify_squaring_identity(int i, std::size_t r);

/// g_{2n} == g_n^2 + w2 g_{n-1}^2, n >= 1.
bool verify_doubling(std::size_t n);

}  // namespace gzcl
