#pragma once

#include <functional>
#include <vector>

#include "widthone/bigint.hpp"
#include "widthone/sum_matrix.hpp"

namespace widthone {

// Dense nonnegative integer matrix. The width-one condition (support forms
// a chain in the weakly-northwest grid order) is checked by is_width_one and
// enforced by the operations that promise it, not by the struct itself, so
// tests can build arbitrary matrices.
struct WidthOneMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long> entries;  // row-major

    WidthOneMatrix() = default;
    WidthOneMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, 0) {}

    long& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    long at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }

    long sum() const;
    std::vector<long> row_sums() const;
    std::vector<long> col_sums() const;

    bool operator==(const WidthOneMatrix& other) const = default;
};

// True iff all entries are nonnegative and the support coordinates are
// pairwise comparable under the product order.
bool is_width_one(const WidthOneMatrix& m);

// 2 x d array with both rows weakly increasing; the top row ranges over row
// indices, the bottom over column indices, 1-based. Column l records one
// unit at matrix position (top[l], bottom[l]).
struct Biword {
    std::vector<int> top;
    std::vector<int> bottom;

    long length() const { return static_cast<long>(top.size()); }
    bool operator==(const Biword& other) const = default;
};

// Support coordinates in ascending chain order, each repeated T_ij times.
// Throws std::invalid_argument if m is not width-one or has negative entries.
Biword matrix_to_biword(const WidthOneMatrix& m);

// Inverse of matrix_to_biword. Validates weak increase and index ranges.
WidthOneMatrix biword_to_matrix(const Biword& b, int rows, int cols);

// Every pair of weakly increasing sequences (length d over {1..n1} and
// {1..n2}), visited once in lexicographic order (top row major). The visit
// count is C(d+n1-1,d) * C(d+n2-1,d).
void for_each_biword(long d, int n1, int n2, const std::function<void(const Biword&)>& fn);

// All weakly increasing length-d sequences over {1..n}, lexicographic.
void for_each_weakly_increasing(long d, int n, const std::function<void(const std::vector<int>&)>& fn);

// C(d+n1-1,d) * C(d+n2-1,d), the number of width-one matrices.
BigInt width_one_count(long d, int n1, int n2);

// Ground-truth oracle: entrywise sum over the full enumeration. Refuses
// instances with more than kEnumerationGuard matrices unless forced.
inline constexpr long kEnumerationGuard = 10'000'000;
SumMatrix sum_all_oracle(long d, int n1, int n2, bool force = false);

}  // namespace widthone
