#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "gzcl/bounds.hpp"
#include "gzcl/g_series.hpp"
#include "gzcl/groebner.hpp"
#include "gzcl/io.hpp"
#include "gzcl/parallel.hpp"
#include "gzcl/quotient.hpp"
#include "gzcl/tables.hpp"
#include "gzcl/verify.hpp"
#include "gzcl/version.hpp"
#include "gzcl/zcl.hpp"

using namespace gzcl;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "a..b" or a single integer.
std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        std::size_t used = 0;
        const int lo = std::stoi(text.substr(0, dots), &used);
        if (used != dots)
            throw std::invalid_argument(text);
        const std::string rest = text.substr(dots + 2);
        const int hi = std::stoi(rest, &used);
        if (used != rest.size())
            throw std::invalid_argument(text);
        if (hi < lo)
            throw UsageError("empty range: " + text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("bad range: " + text + " (expected a..b)");
    }
}

struct Globals {
    std::string format = "text";
    std::string cache_dir;
    unsigned jobs = default_jobs();
};

ResultCache make_cache(const Globals& g) {
    if (!g.cache_dir.empty())
        return ResultCache(std::filesystem::path(g.cache_dir));
    if (const char* env = std::getenv("GZCL_CACHE_DIR"); env && *env)
        return ResultCache(std::filesystem::path(env));
    return ResultCache(std::nullopt);
}

Format format_of(const Globals& g, bool csv_ok) {
    const Format f = parse_format(g.format);
    if (f == Format::csv && !csv_ok)
        throw UsageError("--format csv is only available for tables and zcl-range");
    return f;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string pair_text(const MonomialPair& p) { return to_string(p.first) + " (x) " + to_string(p.second); }

int cmd_g(const Globals& g, int r) {
    if (r < 0)
        throw UsageError("r must be nonnegative");
    const Poly p = g_recurrence(static_cast<std::size_t>(r));
    if (format_of(g, false) == Format::json)
        print_json({{"r", r}, {"g", to_string(p)}, {"terms", to_json(p)}});
    else
        std::cout << to_string(p) << '\n';
    return kOk;
}

int cmd_groebner(const Globals& g, int n, bool reduced) {
    if (n < 2)
        throw UsageError("groebner needs n >= 2");
    GroebnerBasis gb = *ideal_basis(n);
    if (reduced)
        gb = reduce_basis(gb);
    if (format_of(g, false) == Format::json) {
        print_json(to_json(gb));
        return kOk;
    }
    std::cout << "Groebner basis of I_" << n;
    if (n >= 7) {
        const auto prof = binary_profile(n);
        std::cout << " (t=" << prof.t << ", alpha=";
        for (std::size_t i = 0; i < prof.alpha.size(); ++i)
            std::cout << (i ? "," : "") << prof.alpha[i];
        std::cout << ", s=";
        for (std::size_t i = 0; i < prof.s.size(); ++i)
            std::cout << (i ? "," : "") << prof.s[i];
        std::cout << ")";
    }
    std::cout << (reduced ? ", reduced" : "") << '\n';
    for (std::size_t i = 0; i < gb.size(); ++i)
        std::cout << "f_" << i << " = " << to_string(gb[i]) << "    [LM " << to_string(gb.lms()[i]) << "]\n";
    return kOk;
}

int cmd_basis(const Globals& g, int n, std::optional<int> degree) {
    if (n < 6)
        throw UsageError("basis needs n >= 6");
    const auto q = build_quotient(n);
    if (degree && (*degree < 0 || *degree > q->max_degree()) && format_of(g, false) == Format::text) {
        std::cout << "degree " << *degree << ": (none)\n";
        return kOk;
    }
    if (format_of(g, false) == Format::json) {
        print_json(basis_json(*q, degree));
        return kOk;
    }
    std::cout << "dim W_" << n << " = " << q->dimension() << '\n';
    for (int d = 0; d <= q->max_degree(); ++d) {
        if (degree && *degree != d)
            continue;
        const auto& ms = q->basis_in_degree(d);
        if (ms.empty() && !degree)
            continue;
        std::cout << "degree " << d << " (" << ms.size() << "):";
        for (const auto& m : ms)
            std::cout << ' ' << to_string(m);
        std::cout << '\n';
    }
    return kOk;
}

int cmd_nf(const Globals& g, int n, int b, int c) {
    if (n < 6)
        throw UsageError("nf needs n >= 6");
    if (b < 0 || c < 0)
        throw UsageError("exponents must be nonnegative");
    const auto q = build_quotient(n);
    const Poly p = q->nf_monomial(static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(c));
    if (format_of(g, false) == Format::json)
        print_json({{"n", n}, {"b", b}, {"c", c}, {"nf", to_string(p)}, {"terms", to_json(p)}});
    else
        std::cout << to_string(p) << '\n';
    return kOk;
}

int cmd_height(const Globals& g, int n, bool closed) {
    if (n < 6 || (closed && n < 7))
        throw UsageError(closed ? "closed-form heights need n >= 7" : "height needs n >= 6");
    const Heights h = closed ? heights_closed_form(n) : brute_heights(*build_quotient(n));
    if (format_of(g, false) == Format::json) {
        json j = to_json(h);
        j["n"] = n;
        j["method"] = closed ? "closed" : "brute";
        print_json(j);
    } else {
        std::cout << "height(w2) = " << h.h2 << "\nheight(w3) = " << h.h3 << '\n';
    }
    return kOk;
}

int cmd_zcl(const Globals& g, int n, bool witness, bool closed_check) {
    if (n < 6)
        throw UsageError("zcl needs n >= 6");
    const Format f = format_of(g, false);
    const ZclResult res = cached_zcl(make_cache(g), n);
    std::optional<int> reference;
    if (closed_check)
        reference = expected_zcl(n);
    if (f == Format::json) {
        json j = to_json(res);
        if (reference) {
            j["closed_form"] = *reference;
            j["closed_form_agrees"] = *reference == res.zcl;
        }
        print_json(j);
    } else {
        std::cout << "zcl(W_" << n << ") = " << res.zcl << '\n';
        if (witness) {
            std::cout << "witness: z(w2)^" << res.beta << " z(w3)^" << res.gamma << ", left degree " << res.r << ", pair "
                      << pair_text(res.pair) << '\n';
            std::cout << "search caps: beta <= " << res.beta_cap << ", gamma <= " << res.gamma_cap << '\n';
        }
        if (reference)
            std::cout << (n <= 14 ? "known value: " : "closed form: ") << *reference
                      << (*reference == res.zcl ? " (agrees)" : " (MISMATCH)") << '\n';
    }
    if (reference && *reference != res.zcl) {
        std::cerr << "counterexample: n=" << n << ", operation zcl_wn, expected " << *reference << ", got " << res.zcl << '\n';
        return kVerificationFailed;
    }
    return kOk;
}

int cmd_zcl_range(const Globals& g, int lo, int hi) {
    if (lo < 6 || hi < lo)
        throw UsageError("zcl-range needs 6 <= lo <= hi");
    const Format f = format_of(g, true);
    const ResultCache cache = make_cache(g);
    const auto results = parallel_map(static_cast<std::size_t>(hi - lo + 1), g.jobs,
                                      [&](std::size_t i) { return cached_zcl(cache, lo + static_cast<int>(i)); });
    Table t{{"n", "zcl", "witness_beta", "witness_gamma"}, {}};
    for (const auto& r : results)
        t.rows.push_back({r.n, r.zcl, r.beta, r.gamma});
    std::cout << t.render(f);
    return kOk;
}

int cmd_bounds(const Globals& g, int n) {
    if (n < 15)
        throw UsageError("bounds needs n >= 15");
    const ZclResult res = cached_zcl(make_cache(g), n);
    const BoundsRow row = bounds_row(n, res.zcl);
    if (format_of(g, false) == Format::json) {
        print_json(to_json(row));
        return kOk;
    }
    std::cout << "n = " << n << '\n'
              << "zcl(W_n) = " << row.zcl_wn << '\n'
              << "zcl(oriented Grassmannian) in [" << row.zcl_oriented_lo << ", " << row.zcl_oriented_hi << "]";
    if (row.zcl_oriented_exact)
        std::cout << ", exactly " << *row.zcl_oriented_exact;
    std::cout << '\n' << "TC >= " << row.tc_lower << '\n' << "|a| = " << row.a_deg << '\n';
    std::cout << "|b| = " << (row.b_deg ? std::to_string(*row.b_deg) : std::string("(no such class)")) << '\n';
    if (row.exactness_edge_ambiguous)
        std::cout << "note: exactness edge differs between rational and floored readings at this n\n";
    return kOk;
}

int cmd_table(const Globals& g, const std::string& which, const std::string& range, const std::string& t_range) {
    const Format f = format_of(g, true);
    const ResultCache cache = make_cache(g);
    auto zcl_lookup = [&](int lo, int hi) {
        VerifyOptions o;
        o.jobs = g.jobs;
        o.cache = &cache;
        auto values = compute_zcl_values(lo, hi, o);
        return [values](int n) { return values.at(n); };
    };
    if (which == "g") {
        const auto [lo, hi] = parse_range(range.empty() ? "0..26" : range);
        if (lo < 0)
            throw UsageError("g table range must be nonnegative");
        std::cout << g_table(lo, hi).render(f);
    } else if (which == "small-n") {
        std::cout << small_n_table(zcl_lookup(6, 14)).render(f);
    } else if (which == "heights") {
        const auto [lo, hi] = parse_range(range.empty() ? "7..64" : range);
        if (lo < 7)
            throw UsageError("heights table starts at n >= 7");
        std::cout << heights_table(lo, hi).render(f);
    } else if (which == "tc") {
        const auto [lo, hi] = parse_range(t_range.empty() ? "4..5" : t_range);
        if (lo < 4 || hi > 9)
            throw UsageError("tc table needs 4 <= t <= 9");
        std::cout << tc_table_rows(lo, hi, zcl_lookup((1 << lo) - 1, (1 << (hi + 1)) - 2)).render(f);
    }
    return kOk;
}

int cmd_verify(const Globals& g, const std::string& suite, int t_max) {
    if (t_max < 4 || t_max > 7)
        throw UsageError("--t-max must be between 4 and 7");
    format_of(g, false);
    const ResultCache cache = make_cache(g);
    VerifyOptions o;
    o.t_max = t_max;
    o.jobs = g.jobs;
    o.cache = &cache;
    const auto reports = run_suite(suite, o);
    std::size_t checks = 0, failed = 0;
    json summary = json::array();
    for (const auto& r : reports) {
        checks += r.checks.size();
        const Check* bad = r.first_failure();
        failed += bad ? 1 : 0;
        if (g.format == "json") {
            json item{{"name", r.name}, {"checks", r.checks.size()}, {"passed", bad == nullptr}};
            if (bad)
                item["first_counterexample"] = {{"label", bad->label}, {"detail", bad->detail}};
            summary.push_back(item);
            continue;
        }
        std::cout << (bad ? "FAIL " : "PASS ") << r.name << " (" << r.checks.size() << " checks)\n";
        if (bad)
            std::cout << "  first counterexample: " << bad->label << (bad->detail.empty() ? "" : ": " + bad->detail) << '\n';
    }
    if (g.format == "json")
        print_json({{"suite", suite}, {"t_max", t_max}, {"reports", summary}, {"checks", checks}, {"passed", failed == 0}});
    else
        std::cout << "verify " << suite << ": " << reports.size() << " groups, " << checks << " checks, "
                  << (failed ? std::to_string(failed) + " failing groups" : std::string("all passed")) << '\n';
    return failed ? kVerificationFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zero-divisor cup-length of W_n = Z2[w2,w3]/I_n: computations, tables and verification"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--cache-dir", g.cache_dir, "Directory for cached zcl results (default: $GZCL_CACHE_DIR, else none)");
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));

    int r = 0, n = 0, b = 0, c = 0, lo = 0, hi = 0, t_max = 5;
    bool reduced = false, brute = false, closed = false, witness = false, closed_check = false;
    std::optional<int> degree;
    std::string table_kind, range, t_range, suite;

    auto* g_cmd = app.add_subcommand("g", "Print g_r");
    g_cmd->add_option("r", r)->required();

    auto* gb_cmd = app.add_subcommand("groebner", "Groebner basis of I_n");
    gb_cmd->add_option("n", n)->required();
    gb_cmd->add_flag("--reduced", reduced, "Print the reduced basis");

    auto* basis_cmd = app.add_subcommand("basis", "Additive basis of W_n");
    basis_cmd->add_option("n", n)->required();
    basis_cmd->add_option("--degree", degree, "Only this degree");

    auto* nf_cmd = app.add_subcommand("nf", "Normal form of w2^b w3^c in W_n");
    nf_cmd->add_option("n", n)->required();
    nf_cmd->add_option("b", b)->required();
    nf_cmd->add_option("c", c)->required();

    auto* height_cmd = app.add_subcommand("height", "Heights of w2 and w3 in W_n");
    height_cmd->add_option("n", n)->required();
    auto* brute_flag = height_cmd->add_flag("--brute", brute, "Iterate powers (default)");
    height_cmd->add_flag("--closed", closed, "Closed-form heights")->excludes(brute_flag);

    auto* zcl_cmd = app.add_subcommand("zcl", "zcl(W_n)");
    zcl_cmd->add_option("n", n)->required();
    zcl_cmd->add_flag("--witness", witness, "Show a maximal nonvanishing product");
    zcl_cmd->add_flag("--closed-form-check", closed_check, "Compare with the closed form or known small-n value");

    auto* range_cmd = app.add_subcommand("zcl-range", "zcl(W_n) for lo <= n <= hi");
    range_cmd->add_option("lo", lo)->required();
    range_cmd->add_option("hi", hi)->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "Bounds for the oriented Grassmannian G~(n,3)");
    bounds_cmd->add_option("n", n)->required();

    auto* table_cmd = app.add_subcommand("table", "Reproduce a table");
    table_cmd->add_option("kind", table_kind)->required()->check(CLI::IsMember({"g", "small-n", "heights", "tc"}));
    table_cmd->add_option("--range", range, "Row range a..b (g, heights)");
    table_cmd->add_option("--t", t_range, "Range of t for the TC table, e.g. 4..6");

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", suite)
        ->required()
        ->check(CLI::IsMember({"all", "g-series", "groebner", "quotient", "zcl", "bounds"}));
    verify_cmd->add_option("--t-max", t_max, "Largest t covered (n <= 2^{t+1}-2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*g_cmd)
            return cmd_g(g, r);
        if (*gb_cmd)
            return cmd_groebner(g, n, reduced);
        if (*basis_cmd)
            return cmd_basis(g, n, degree);
        if (*nf_cmd)
            return cmd_nf(g, n, b, c);
        if (*height_cmd)
            return cmd_height(g, n, closed);
        if (*zcl_cmd)
            return cmd_zcl(g, n, witness, closed_check);
        if (*range_cmd)
            return cmd_zcl_range(g, lo, hi);
        if (*bounds_cmd)
            return cmd_bounds(g, n);
        if (*table_cmd)
            return cmd_table(g, table_kind, range, t_range);
        if (*verify_cmd)
            return cmd_verify(g, suite, t_max);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kUsage;
}
