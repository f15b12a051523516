#include "gzcl/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gzcl/bounds.hpp"
#include "gzcl/g_series.hpp"
#include "gzcl/quotient.hpp"

namespace gzcl {

Format parse_format(const std::string& name) {
    if (name == "text")
        return Format::text;
    if (name == "csv")
        return Format::csv;
    if (name == "json")
        return Format::json;
    throw std::invalid_argument("unknown format: " + name);
}

namespace {

std::string cell_text(const nlohmann::json& v) {
    if (v.is_null())
        return "";
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

}  // namespace

std::string Table::render(Format format) const {
    std::ostringstream out;
    switch (format) {
    case Format::json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json obj = nlohmann::json::object();
            for (std::size_t i = 0; i < columns.size(); ++i)
                obj[columns[i]] = row[i];
            arr.push_back(std::move(obj));
        }
        out << arr.dump(2) << '\n';
        break;
    }
    case Format::csv:
        for (std::size_t i = 0; i < columns.size(); ++i)
            out << (i ? "," : "") << columns[i];
        out << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << cell_text(row[i]);
            out << '\n';
        }
        break;
    case Format::text: {
        std::vector<std::size_t> width(columns.size());
        for (std::size_t i = 0; i < columns.size(); ++i)
            width[i] = columns[i].size();
        for (const auto& row : rows)
            for (std::size_t i = 0; i < row.size(); ++i)
                width[i] = std::max(width[i], cell_text(row[i]).size());
        auto line = [&](const std::vector<std::string>& cells) {
            std::string s;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                s += cells[i];
                if (i + 1 < cells.size())
                    s += std::string(width[i] - cells[i].size() + 2, ' ');
            }
            out << s << '\n';
        };
        line(columns);
        for (const auto& row : rows) {
            std::vector<std::string> cells;
            for (const auto& v : row)
                cells.push_back(cell_text(v));
            line(cells);
        }
        break;
    }
    }
    return out.str();
}

Table g_table(int lo, int hi) {
    if (lo < 0 || hi < lo)
        throw std::invalid_argument("g table: bad range");
    Table t{{"r", "g_r"}, {}};
    for (int r = lo; r <= hi; ++r)
        t.rows.push_back({r, to_string(g_recurrence(static_cast<std::size_t>(r)))});
    return t;
}

Table small_n_table(const ZclLookup& zcl_of) {
    Table t{{"n", "zcl"}, {}};
    for (int n = 6; n <= 14; ++n)
        t.rows.push_back({n, zcl_of(n)});
    return t;
}

Table heights_table(int lo, int hi) {
    if (lo < 7 || hi < lo)
        throw std::invalid_argument("heights table: range must start at n >= 7");
    Table t{{"n", "h2", "h3"}, {}};
    for (int n = lo; n <= hi; ++n) {
        const Heights h = brute_heights(*build_quotient(n));
        t.rows.push_back({n, h.h2, h.h3});
    }
    return t;
}

Table tc_table_rows(int t_lo, int t_hi, const ZclLookup& zcl_of) {
    Table out{{"t", "n_lo", "n_hi", "zcl_wn", "zcl_oriented", "exact", "tc_lower", "uniform"}, {}};
    for (int t = t_lo; t <= t_hi; ++t)
        for (const auto& band : tc_table(t, zcl_of))
            out.rows.push_back({t, band.n_lo, band.n_hi, band.zcl_wn, band.zcl_oriented_lo, band.exact, band.tc_lower,
                                band.uniform});
    return out;
}

}  // namespace gzcl
