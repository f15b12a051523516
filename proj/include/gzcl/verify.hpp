#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gzcl/report.hpp"

namespace gzcl {

class ResultCache;

/// Canonical renderings of g_0 .. g_26 as printed in the reference table.
const std::vector<std::string>& reference_g_table();

/// Known zcl(W_n) for n = 6..14, and the closed form for n >= 15.
int expected_zcl(int n);

// Individual checks; each returns a report whose failed entries carry
// "expected ..., got ..." details.

Report check_g_table();
Report check_g_constructions(int r_max);          ///< recurrence vs explicit, homogeneity
Report check_g_power_series_prefix(int r_max);    ///< (1 + w2 + w3)(g_0 + ... + g_R) = 1 + higher terms
Report check_g_identities(int g3_t_max, int square_i_max, int square_r_max, int doubling_n_max);

Report check_groebner_at(int n);                  ///< closed form vs Buchberger, LMs, ideal chain
Report check_groebner_examples();
Report check_squaring_membership(int n_max, int trials, std::uint64_t seed);
Report check_membership_lemmas(int t_lo, int t_hi);
Report check_case_bases(int t_lo, int t_hi);

/// Heights, top-dimension bound, cuplength classes, fast path vs division
/// and normal-form idempotence/linearity on `samples` random inputs each.
Report check_quotient_at(int n, int samples, std::uint64_t seed);
Report check_quotient_examples();
Report check_top_class_lemmas(int t_hi);

/// zcl values against the reference table / closed form, plus monotonicity.
Report check_zcl_values(const std::map<int, int>& computed);
Report check_zero_divisor_heights(int n);         ///< cap and cap+1 for both generators
Report check_tensor_symmetry(int n, int samples, std::uint64_t seed);
Report check_graded_pieces_vs_naive(int n, int max_total);
Report check_zcl_witnesses();
Report check_upper_bound_lemmas(int t_lo, int t_hi);

Report check_bounds_rows(const std::map<int, int>& computed);
Report check_ineq(int t_lo, int t_hi);
Report check_tc_structure(int t, const std::map<int, int>& computed);

struct VerifyOptions {
    int t_max = 5;
    unsigned jobs = 1;
    std::uint64_t seed = 0x5eed2024;
    const ResultCache* cache = nullptr;
};

const std::vector<std::string>& suite_names();  ///< g-series, groebner, quotient, zcl, bounds

/// Runs one suite ("all" runs every suite in order). Output is independent of jobs.
std::vector<Report> run_suite(const std::string& name, const VerifyOptions& options);

/// zcl_wn for every n in [lo, hi], fanned out over options.jobs workers.
std::map<int, int> compute_zcl_values(int lo, int hi, const VerifyOptions& options);

}  // namespace gzcl
