#pragma once

#include <utility>
#include <vector>

#include "mzv/shuffle.hpp"

namespace mzv {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Rank over Q by fraction-free (Bareiss) elimination: each row is first
// scaled to integers, then eliminated with exact divisions only.
inline int rank_exact(const RationalMatrix& m) {
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (size_t r = 0; r < rows; ++r) {
        if (m[r].size() != cols) throw std::invalid_argument("rank_exact: ragged matrix");
        Integer lcm = 1;
        for (const Rational& q : m[r]) lcm = boost::multiprecision::lcm(lcm, denominator(q));
        for (size_t c = 0; c < cols; ++c) {
            const Rational scaled = m[r][c] * Rational(lcm);
            a[r][c] = numerator(scaled);
        }
    }
    int rank = 0;
    Integer prev = 1;
    for (size_t col = 0; col < cols && static_cast<size_t>(rank) < rows; ++col) {
        size_t pivot = static_cast<size_t>(rank);
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[static_cast<size_t>(rank)], a[pivot]);
        const Integer piv = a[static_cast<size_t>(rank)][col];
        for (size_t r = static_cast<size_t>(rank) + 1; r < rows; ++r) {
            for (size_t c = col + 1; c < cols; ++c) {
                a[r][c] = (piv * a[r][c] - a[r][col] * a[static_cast<size_t>(rank)][c]) / prev;
            }
            a[r][col] = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

struct RelationMatrix {
    int weight = 0;
    std::vector<Index> columns;                      // admissible, canonical order
    std::vector<std::pair<Index, Index>> row_pairs;  // ordered pairs, both orders kept
    RationalMatrix entries;
};

// One row per ordered admissible pair (a, b) with weight(a) + weight(b) = w,
// columns the admissible indices of weight w. Rows for (a, b) and (b, a)
// coincide since both products are commutative; they are kept anyway so that
// the row list enumerates pairs, not sets.
inline RelationMatrix relation_matrix(int w) {
    if (w < 4) throw std::invalid_argument("relation_matrix: no admissible pairs below weight 4");
    RelationMatrix out;
    out.weight = w;
    out.columns = enumerate_admissible(w);
    for (int wa = 2; wa <= w - 2; ++wa) {
        for (const Index& a : enumerate_admissible(wa))
            for (const Index& b : enumerate_admissible(w - wa)) out.row_pairs.emplace_back(a, b);
    }
    out.entries.reserve(out.row_pairs.size());
    for (const auto& [a, b] : out.row_pairs) {
        LinComb<Index> rel = double_shuffle_relation(a, b, w);
        std::vector<Rational> row;
        row.reserve(out.columns.size());
        for (const Index& col : out.columns) row.push_back(rel.coeff(col));
        out.entries.push_back(std::move(row));
    }
    return out;
}

inline int relation_rank(int w) { return rank_exact(relation_matrix(w).entries); }

}  // namespace mzv
