#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gzcl {

enum class Format { text, csv, json };

Format parse_format(const std::string& name);  ///< throws std::invalid_argument

/// Rectangular table with JSON-typed cells (ints, strings, bools, null).
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;

    /// text: left-aligned columns separated by two spaces, header first;
    /// csv: header line then rows; json: array of {column: value} objects.
    std::string render(Format format) const;
};

using ZclLookup = std::function<int(int)>;

/// r, g_r for lo <= r <= hi.
Table g_table(int lo, int hi);
/// n, zcl for 6 <= n <= 14.
Table small_n_table(const ZclLookup& zcl_of);
/// n, h2, h3 (brute force) for lo <= n <= hi.
Table heights_table(int lo, int hi);
/// One row per TC band for each t in [t_lo, t_hi].
Table tc_table_rows(int t_lo, int t_hi, const ZclLookup& zcl_of);

}  // namespace gzcl
