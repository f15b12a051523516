#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gzcl/report.hpp"

namespace gzcl {

struct ExceptionalDegrees {
    int a = 0;
    std::optional<int> b;
};

/// Degrees of the indecomposables of H*(G~(n,3)) outside W_n, n >= 15.
/// No b for n in {2^t-1, 2^t, 2^{t+1}-3, 2^{t+1}-2}.
ExceptionalDegrees exceptional_degrees(int n);

/// |a| read off the band table (edge 2^t + floor(2^t/3)).
int exceptional_degree_a_by_band(int n);

/// Sandwich 1 + zcl(W_n) <= zcl(G~(n,3)) <= 2 + zcl(W_n) and the TC bound.
struct BoundsRow {
    int n = 0;
    int zcl_wn = 0;
    int zcl_oriented_lo = 0;
    int zcl_oriented_hi = 0;
    std::optional<int> zcl_oriented_exact;
    int tc_lower = 0;
    int a_deg = 0;
    std::optional<int> b_deg;
    /// n where "n < 2^t + 2^{t-1}/3 + 1" read over Q and with a floor differ.
    bool exactness_edge_ambiguous = false;

    friend bool operator==(const BoundsRow&, const BoundsRow&) = default;
};

/// Exactness ranges, with the strict upper edge compared over the rationals.
bool zcl_oriented_exact_range(int n);

BoundsRow bounds_row(int n, int zcl_value);

/// One band of the TC table, with zcl(W_n) supplied per n.
struct TcBand {
    int n_lo = 0;
    int n_hi = 0;
    int zcl_wn = 0;
    int zcl_oriented_lo = 0;
    bool exact = false;
    int tc_lower = 0;
    bool uniform = true;  ///< every n in the band gave the same zcl(W_n) and exactness
};

std::vector<TcBand> tc_table(int t, const std::function<int(int)>& zcl_of);

/// The contradiction inequality 6n + height(z(w2)) < 3(|a| + zcl(W_n)) + 16
/// on every n in [2^t-1, 2^{t+1}-2], plus the band-table columns and the
/// exactness inequality 3n + height(z(w2)) < 3 zcl(W_n) + 14.
Report verify_ineq_arithmetic(int t);

}  // namespace gzcl
