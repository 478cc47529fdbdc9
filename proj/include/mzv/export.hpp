#pragma once

// Serialization of the double shuffle relations of one weight. Rows follow
// the relation-matrix pair order and columns the canonical admissible order,
// so output bytes depend on nothing but the weight and format.

#include <json.hpp>

#include <string>
#include <vector>

#include "mzv/matrix.hpp"

namespace mzv {

namespace detail {

// CSV cell for a rational coefficient: integer text when the denominator is
// one, "num/den" otherwise.
inline std::string csv_rational(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace detail

inline nlohmann::ordered_json relation_to_json(const Index& a, const Index& b,
                                               const std::vector<Index>& columns,
                                               const std::vector<Rational>& row) {
    nlohmann::ordered_json j;
    j["a"] = a.parts();
    j["b"] = b.parts();
    j["terms"] = nlohmann::ordered_json::array();
    for (size_t c = 0; c < columns.size(); ++c) {
        if (row[c] == 0) continue;
        nlohmann::ordered_json term;
        term["index"] = columns[c].parts();
        term["num"] = to_int64_checked(numerator(row[c]));
        term["den"] = to_int64_checked(denominator(row[c]));
        j["terms"].push_back(term);
    }
    return j;
}

// One JSON object per relation, in row order.
inline std::vector<std::string> relations_jsonl(int w) {
    RelationMatrix m = relation_matrix(w);
    std::vector<std::string> lines;
    lines.reserve(m.row_pairs.size());
    for (size_t r = 0; r < m.row_pairs.size(); ++r)
        lines.push_back(
            relation_to_json(m.row_pairs[r].first, m.row_pairs[r].second, m.columns, m.entries[r])
                .dump());
    return lines;
}

// Full coefficient matrix with a header row; every field is double-quoted
// since index texts contain commas.
inline std::vector<std::string> relations_csv(int w) {
    RelationMatrix m = relation_matrix(w);
    std::vector<std::string> lines;
    lines.reserve(m.row_pairs.size() + 1);
    std::string header = detail::csv_quote("a") + "," + detail::csv_quote("b");
    for (const Index& col : m.columns) header += "," + detail::csv_quote(to_string(col));
    lines.push_back(std::move(header));
    for (size_t r = 0; r < m.row_pairs.size(); ++r) {
        std::string line = detail::csv_quote(to_string(m.row_pairs[r].first)) + "," +
                           detail::csv_quote(to_string(m.row_pairs[r].second));
        for (const Rational& q : m.entries[r]) line += "," + detail::csv_quote(detail::csv_rational(q));
        lines.push_back(std::move(line));
    }
    return lines;
}

}  // namespace mzv
