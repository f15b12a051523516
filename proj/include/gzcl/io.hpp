#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include <json.hpp>

#include "gzcl/bounds.hpp"
#include "gzcl/groebner.hpp"
#include "gzcl/quotient.hpp"
#include "gzcl/zcl.hpp"

namespace gzcl {

using json = nlohmann::json;

json to_json(const Monomial& m);
Monomial monomial_from_json(const json& j);

json to_json(const Poly& p);  ///< [{b,c}, ...] in canonical order
Poly poly_from_json(const json& j);

/// {n, t, alpha[], s[], polys[{terms[{b,c}], lm{b,c}}]}; t/alpha/s are null below n = 7.
json to_json(const GroebnerBasis& gb);
GroebnerBasis groebner_from_json(const json& j);

json to_json(const Heights& h);
Heights heights_from_json(const json& j);

json to_json(const ZclResult& r);
ZclResult zcl_result_from_json(const json& j);

json to_json(const BoundsRow& row);
BoundsRow bounds_row_from_json(const json& j);

json to_json(const TcBand& band);
TcBand tc_band_from_json(const json& j);

/// {n, max_degree, dimension, degree_counts[]} and, when `degree` is given,
/// basis[{degree, monomials[{b,c}]}] for that degree only (all degrees otherwise).
json basis_json(const QuotientRing& q, std::optional<int> degree);

/// One JSON file per (kind, n). Entries written by another version or schema
/// are treated as missing.
class ResultCache {
public:
    explicit ResultCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

    bool enabled() const { return dir_.has_value(); }
    std::filesystem::path path_for(const std::string& kind, int n) const;
    std::optional<json> load(const std::string& kind, int n) const;
    void store(const std::string& kind, int n, const json& payload) const;

private:
    std::optional<std::filesystem::path> dir_;
};

/// zcl_wn(n) through the cache.
ZclResult cached_zcl(const ResultCache& cache, int n);

}  // namespace gzcl
