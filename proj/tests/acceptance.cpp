// One pass/fail line per acceptance criterion, with wall-clock budgets.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gzcl/bounds.hpp"
#include "gzcl/groebner.hpp"
#include "gzcl/parallel.hpp"
#include "gzcl/quotient.hpp"
#include "gzcl/tables.hpp"
#include "gzcl/verify.hpp"
#include "gzcl/zcl.hpp"

using namespace gzcl;

namespace {

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<Report()> run;
};

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(GZCL_GOLDEN_DIR) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Report combine(std::string name, const std::vector<Report>& parts) {
    Report out{std::move(name), {}};
    for (const auto& p : parts)
        out.merge(p);
    return out;
}

std::vector<Report> per_n(int lo, int hi, const std::function<Report(int)>& fn) {
    return parallel_map(static_cast<std::size_t>(hi - lo + 1), default_jobs(),
                        [&](std::size_t i) { return fn(lo + static_cast<int>(i)); });
}

}  // namespace

int main() {
    VerifyOptions opts;
    opts.jobs = default_jobs();

    const std::vector<Criterion> criteria = {
        {1, "g_0..g_26 table reproduction; recurrence = explicit for r <= 512", 1.0,
         [] {
             Report golden{"golden", {}};
             golden.add("table g --range 0..26 (csv) matches golden", g_table(0, 26).render(Format::csv) == slurp("table_g.csv"));
             return combine("c1", {check_g_table(), check_g_constructions(512), golden});
         }},
        {2, "closed-form Groebner basis = reduced Buchberger basis and LM formula, n in [7, 64]", 30.0,
         [] { return combine("c2", per_n(7, 64, check_groebner_at)); }},
        {3, "brute-force heights = closed-form heights, n in [7, 64]", 30.0,
         [] {
             return combine("c3", per_n(7, 64, [](int n) {
                                Report r{"n=" + std::to_string(n), {}};
                                const Heights got = brute_heights(*build_quotient(n));
                                const Heights want = heights_closed_form(n);
                                r.add("heights", got == want,
                                      "expected (" + std::to_string(want.h2) + ", " + std::to_string(want.h3) + "), got (" +
                                          std::to_string(got.h2) + ", " + std::to_string(got.h3) + ")");
                                return r;
                            }));
         }},
        {4, "zcl(W_n) = known values for n = 6..14 and the closed form for n in [15, 62]", 600.0,
         [&] {
             const auto values = compute_zcl_values(6, 62, opts);
             Report cases{"case coverage", {}};
             for (int t = 4; t <= 5; ++t) {
                 const auto bands = tc_table(t, [&](int n) { return values.at(n); });
                 cases.add("t=" + std::to_string(t) + " all case bands nonempty and covered", bands.size() == static_cast<std::size_t>(t + 4));
             }
             return combine("c4", {check_zcl_values(values), cases});
         }},
        {5, "identity suite: g at 2^t-3 etc., squaring, doubling, w3 I_n squares, membership lemmas, ideal chain", 60.0,
         [] {
             std::vector<Report> parts = {check_g_identities(7, 4, 40, 200), check_squaring_membership(24, 6, 5),
                                          check_membership_lemmas(3, 6)};
             for (auto& r : per_n(6, 64, [](int n) { return verify_ideal_chain(n); }))
                 parts.push_back(std::move(r));
             return combine("c5", parts);
         }},
        {6, "proof witnesses: graded pieces at n = 21, 22, upper-bound vanishings, top-degree classifications", 60.0,
         [] {
             return combine("c6", {check_zcl_witnesses(), check_upper_bound_lemmas(4, 5), check_top_class_lemmas(6),
                                   check_case_bases(4, 6)});
         }},
        {7, "properties: monotonicity, NF idempotence/linearity, symmetry, fast path, top dimension, cup-length classes", 120.0,
         [&] {
             std::vector<Report> parts = per_n(6, 64, [](int n) { return check_quotient_at(n, 200, 0x5eed + static_cast<std::uint64_t>(n)); });
             for (auto& r : per_n(6, 30, [](int n) { return check_tensor_symmetry(n, 6, static_cast<std::uint64_t>(n)); }))
                 parts.push_back(std::move(r));
             for (auto& r : per_n(6, 40, check_zero_divisor_heights))
                 parts.push_back(std::move(r));
             for (int n : {7, 10, 15, 21})
                 parts.push_back(check_graded_pieces_vs_naive(n, 12));
             parts.push_back(check_zcl_values(compute_zcl_values(6, 62, opts)));
             return combine("c7", parts);
         }},
        {8, "bounds: inequality for t in [4, 10], TC table for t = 4, 5, rows from computed = closed form", 5.0,
         [&] {
             const auto values = compute_zcl_values(15, 62, opts);
             return combine("c8", {check_ineq(4, 10), check_tc_structure(4, values), check_tc_structure(5, values),
                                   check_bounds_rows(values)});
         }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Report rep = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = secs <= c.budget_s;
        const bool ok = rep.passed() && !rep.checks.empty() && in_budget;
        failed += ok ? 0 : 1;
        std::printf("criterion %d [%s] %s: %zu checks, %.3f s (budget %.0f s)\n", c.id, ok ? "PASS" : "FAIL", c.title.c_str(),
                    rep.checks.size(), secs, c.budget_s);
        if (const Check* bad = rep.first_failure())
            std::printf("  first counterexample: %s: %s\n", bad->label.c_str(), bad->detail.c_str());
        if (!in_budget)
            std::printf("  over the runtime budget\n");
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
