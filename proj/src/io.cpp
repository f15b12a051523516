#include "gzcl/io.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

#include "gzcl/version.hpp"

namespace gzcl {

json to_json(const Monomial& m) { return json{{"b", m.b}, {"c", m.c}}; }

Monomial monomial_from_json(const json& j) { return Monomial{j.at("b").get<std::uint32_t>(), j.at("c").get<std::uint32_t>()}; }

json to_json(const Poly& p) {
    json out = json::array();
    for (const auto& m : p)
        out.push_back(to_json(m));
    return out;
}

Poly poly_from_json(const json& j) {
    std::vector<Monomial> terms;
    for (const auto& m : j)
        terms.push_back(monomial_from_json(m));
    return Poly::from_terms(std::move(terms));
}

json to_json(const GroebnerBasis& gb) {
    json out{{"n", gb.n()}, {"t", nullptr}, {"alpha", nullptr}, {"s", nullptr}};
    if (gb.n() >= 7) {
        const auto prof = binary_profile(gb.n());
        out["t"] = prof.t;
        out["alpha"] = prof.alpha;
        out["s"] = prof.s;
    }
    json polys = json::array();
    for (std::size_t i = 0; i < gb.size(); ++i)
        polys.push_back({{"terms", to_json(gb[i])}, {"lm", to_json(gb.lms()[i])}});
    out["polys"] = std::move(polys);
    return out;
}

GroebnerBasis groebner_from_json(const json& j) {
    std::vector<Poly> polys;
    for (const auto& p : j.at("polys")) {
        polys.push_back(poly_from_json(p.at("terms")));
        if (leading_monomial(polys.back()) != monomial_from_json(p.at("lm")))
            throw std::invalid_argument("groebner json: lm does not match terms");
    }
    return GroebnerBasis(j.at("n").get<int>(), std::move(polys));
}

json to_json(const Heights& h) { return json{{"h2", h.h2}, {"h3", h.h3}}; }

Heights heights_from_json(const json& j) { return Heights{j.at("h2").get<int>(), j.at("h3").get<int>()}; }

json to_json(const ZclResult& r) {
    return json{{"n", r.n},
                {"zcl", r.zcl},
                {"beta", r.beta},
                {"gamma", r.gamma},
                {"r", r.r},
                {"pair", {to_json(r.pair.first), to_json(r.pair.second)}},
                {"beta_cap", r.beta_cap},
                {"gamma_cap", r.gamma_cap}};
}

ZclResult zcl_result_from_json(const json& j) {
    ZclResult r;
    r.n = j.at("n").get<int>();
    r.zcl = j.at("zcl").get<int>();
    r.beta = j.at("beta").get<int>();
    r.gamma = j.at("gamma").get<int>();
    r.r = j.at("r").get<int>();
    r.pair = {monomial_from_json(j.at("pair").at(0)), monomial_from_json(j.at("pair").at(1))};
    r.beta_cap = j.at("beta_cap").get<int>();
    r.gamma_cap = j.at("gamma_cap").get<int>();
    return r;
}

namespace {

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::optional<int> optional_int(const json& j) {
    if (j.is_null())
        return std::nullopt;
    return j.get<int>();
}

}  // namespace

json to_json(const BoundsRow& row) {
    return json{{"n", row.n},
                {"zcl_wn", row.zcl_wn},
                {"zcl_oriented_lo", row.zcl_oriented_lo},
                {"zcl_oriented_hi", row.zcl_oriented_hi},
                {"zcl_oriented_exact", optional_int(row.zcl_oriented_exact)},
                {"tc_lower", row.tc_lower},
                {"a_deg", row.a_deg},
                {"b_deg", optional_int(row.b_deg)},
                {"exactness_edge_ambiguous", row.exactness_edge_ambiguous}};
}

BoundsRow bounds_row_from_json(const json& j) {
    BoundsRow row;
    row.n = j.at("n").get<int>();
    row.zcl_wn = j.at("zcl_wn").get<int>();
    row.zcl_oriented_lo = j.at("zcl_oriented_lo").get<int>();
    row.zcl_oriented_hi = j.at("zcl_oriented_hi").get<int>();
    row.zcl_oriented_exact = optional_int(j.at("zcl_oriented_exact"));
    row.tc_lower = j.at("tc_lower").get<int>();
    row.a_deg = j.at("a_deg").get<int>();
    row.b_deg = optional_int(j.at("b_deg"));
    row.exactness_edge_ambiguous = j.at("exactness_edge_ambiguous").get<bool>();
    return row;
}

json to_json(const TcBand& band) {
    return json{{"n_lo", band.n_lo},   {"n_hi", band.n_hi},         {"zcl_wn", band.zcl_wn},
                {"zcl_oriented_lo", band.zcl_oriented_lo},           {"exact", band.exact},
                {"tc_lower", band.tc_lower}, {"uniform", band.uniform}};
}

TcBand tc_band_from_json(const json& j) {
    TcBand band;
    band.n_lo = j.at("n_lo").get<int>();
    band.n_hi = j.at("n_hi").get<int>();
    band.zcl_wn = j.at("zcl_wn").get<int>();
    band.zcl_oriented_lo = j.at("zcl_oriented_lo").get<int>();
    band.exact = j.at("exact").get<bool>();
    band.tc_lower = j.at("tc_lower").get<int>();
    band.uniform = j.at("uniform").get<bool>();
    return band;
}

json basis_json(const QuotientRing& q, std::optional<int> degree) {
    json out{{"n", q.n()}, {"max_degree", q.max_degree()}, {"dimension", q.dimension()}, {"degree_counts", degree_counts(q)}};
    json basis = json::array();
    for (int d = 0; d <= q.max_degree(); ++d) {
        if (degree && *degree != d)
            continue;
        json monos = json::array();
        for (const auto& m : q.basis_in_degree(d))
            monos.push_back(to_json(m));
        basis.push_back({{"degree", d}, {"monomials", std::move(monos)}});
    }
    out["basis"] = std::move(basis);
    return out;
}

std::filesystem::path ResultCache::path_for(const std::string& kind, int n) const {
    if (!dir_)
        throw std::logic_error("cache disabled");
    return *dir_ / (kind + "-" + std::to_string(n) + ".json");
}

std::optional<json> ResultCache::load(const std::string& kind, int n) const {
    if (!dir_)
        return std::nullopt;
    std::ifstream in(path_for(kind, n));
    if (!in)
        return std::nullopt;
    json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object())
        return std::nullopt;
    if (doc.value("schema_version", -1) != kCacheSchemaVersion || doc.value("version", "") != kVersion ||
        doc.value("kind", "") != kind || doc.value("n", -1) != n || !doc.contains("payload"))
        return std::nullopt;
    return doc["payload"];
}

void ResultCache::store(const std::string& kind, int n, const json& payload) const {
    if (!dir_)
        return;
    std::filesystem::create_directories(*dir_);
    const auto target = path_for(kind, n);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << json{{"schema_version", kCacheSchemaVersion}, {"version", kVersion}, {"kind", kind}, {"n", n}, {"payload", payload}}
                   .dump(2)
            << '\n';
    }
    std::filesystem::rename(tmp, target);
}

ZclResult cached_zcl(const ResultCache& cache, int n) {
    if (auto hit = cache.load("zcl", n)) {
        try {
            return zcl_result_from_json(*hit);
        } catch (const json::exception&) {
            // malformed payload: recompute below
        }
    }
    ZclResult result = zcl_wn(n);
    cache.store("zcl", n, to_json(result));
    return result;
}

}  // namespace gzcl
