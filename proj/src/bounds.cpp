#include "gzcl/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gzcl/quotient.hpp"
#include "gzcl/zcl.hpp"

namespace gzcl {

namespace {

int pow2(int k) { return 1 << k; }

// 2^t - 1 <= n <= 2^{t+1} - 2
int t_of(int n) {
    int t = 0;
    while (pow2(t + 1) - 1 <= n)
        ++t;
    return t;
}

bool lone_indecomposable(int n, int t) {
    return n == pow2(t) - 1 || n == pow2(t) || n == pow2(t + 1) - 3 || n == pow2(t + 1) - 2;
}

}  // namespace

ExceptionalDegrees exceptional_degrees(int n) {
    if (n < 15)
        throw std::domain_error("exceptional_degrees: unsupported n = " + std::to_string(n) + " (need n >= 15)");
    const int t = t_of(n);
    const int x = 3 * n - pow2(t + 1) - 1;
    const int y = pow2(t + 1) - 4;
    ExceptionalDegrees out{std::min(x, y), std::nullopt};
    if (!lone_indecomposable(n, t))
        out.b = std::max(x, y);
    return out;
}

int exceptional_degree_a_by_band(int n) {
    const int t = t_of(n);
    return n <= pow2(t) + pow2(t) / 3 - 1 ? 3 * n - pow2(t + 1) - 1 : pow2(t + 1) - 4;
}

bool zcl_oriented_exact_range(int n) {
    const int t = t_of(n);
    // n < 2^t + 2^{t-1}/3 + 1  <=>  3n < 3*2^t + 2^{t-1} + 3
    const bool low = n >= pow2(t) - 1 && 3 * n < 3 * pow2(t) + pow2(t - 1) + 3;
    const bool high = pow2(t) + pow2(t - 1) + pow2(t - 2) + 1 <= n && n <= pow2(t + 1) - 2;
    return low || high;
}

BoundsRow bounds_row(int n, int zcl_value) {
    const auto deg = exceptional_degrees(n);
    const int t = t_of(n);
    BoundsRow row;
    row.n = n;
    row.zcl_wn = zcl_value;
    row.zcl_oriented_lo = 1 + zcl_value;
    row.zcl_oriented_hi = 2 + zcl_value;
    if (zcl_oriented_exact_range(n))
        row.zcl_oriented_exact = row.zcl_oriented_lo;
    row.tc_lower = 1 + row.zcl_oriented_lo;
    row.a_deg = deg.a;
    row.b_deg = deg.b;
    const bool floored = n < pow2(t) + pow2(t - 1) / 3 + 1;
    const bool rational = 3 * n < 3 * pow2(t) + pow2(t - 1) + 3;
    row.exactness_edge_ambiguous = floored != rational;
    return row;
}

std::vector<TcBand> tc_table(int t, const std::function<int(int)>& zcl_of) {
    if (t < 4)
        throw std::invalid_argument("tc_table requires t >= 4");
    std::vector<std::pair<int, int>> edges = {
        {pow2(t) - 1, pow2(t) + pow2(t - 1) / 3 + 1},
        {pow2(t) + pow2(t - 1) / 3 + 2, pow2(t) + pow2(t - 2)},
        {pow2(t) + pow2(t - 2) + 1, pow2(t) + pow2(t - 2) + 1},
        {pow2(t) + pow2(t - 2) + 2, pow2(t) + pow2(t - 1)},
        {pow2(t) + pow2(t - 1) + 1, pow2(t) + pow2(t - 1) + 1},
        {pow2(t) + pow2(t - 1) + 2, pow2(t) + pow2(t - 1) + pow2(t - 3)},
        {pow2(t) + pow2(t - 1) + pow2(t - 3) + 1, pow2(t) + pow2(t - 1) + pow2(t - 2)},
    };
    for (int s = t - 3; s >= 1; --s)
        edges.emplace_back(pow2(t + 1) - pow2(s + 1) + 1, pow2(t + 1) - pow2(s));

    std::vector<TcBand> bands;
    for (const auto& [lo, hi] : edges) {
        TcBand band;
        band.n_lo = lo;
        band.n_hi = hi;
        const BoundsRow first = bounds_row(lo, zcl_of(lo));
        band.zcl_wn = first.zcl_wn;
        band.zcl_oriented_lo = first.zcl_oriented_lo;
        band.exact = first.zcl_oriented_exact.has_value();
        band.tc_lower = first.tc_lower;
        for (int n = lo + 1; n <= hi; ++n) {
            const BoundsRow row = bounds_row(n, zcl_of(n));
            band.uniform = band.uniform && row.zcl_wn == band.zcl_wn && row.zcl_oriented_exact.has_value() == band.exact;
        }
        bands.push_back(band);
    }
    return bands;
}

Report verify_ineq_arithmetic(int t) {
    if (t < 4)
        throw std::invalid_argument("verify_ineq_arithmetic requires t >= 4");
    Report report{"bounds arithmetic t=" + std::to_string(t), {}};
    for (int n = pow2(t) - 1; n <= pow2(t + 1) - 2; ++n) {
        const auto deg = exceptional_degrees(n);
        const int zcl = zcl_closed_form(n);
        const int ht = zero_divisor_height(heights_closed_form(n).h2);
        const std::string at = "n=" + std::to_string(n);
        const long lhs = 6L * n + ht;
        const long rhs = 3L * (deg.a + zcl) + 16;
        report.add(at + " 6n+ht(z(w2)) < 3(|a|+zcl)+16", lhs < rhs,
                   std::to_string(lhs) + " vs " + std::to_string(rhs));
        report.add(at + " |a| band column", deg.a == exceptional_degree_a_by_band(n));
        const int ht_column = n <= pow2(t) + pow2(t - 1) ? pow2(t) - 1 : pow2(t + 1) - 1;
        report.add(at + " height(z(w2)) column", ht == ht_column);
        if (deg.b)
            report.add(at + " |a|+|b| = 3n-5", deg.a < *deg.b && deg.a + *deg.b == 3 * n - 5);
        if (zcl_oriented_exact_range(n) && deg.b)
            report.add(at + " 3n+ht(z(w2)) < 3zcl+14", 3 * n + ht < 3 * zcl + 14);
    }
    return report;
}

}  // namespace gzcl
