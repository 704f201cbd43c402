#pragma once

#include <vector>

#include "widthone/bigint.hpp"

namespace widthone {

// Binomial coefficient C(a,b) with the zero extension: returns 0 when b < 0
// or b > a. Negative a is a caller error (no formula in this library produces
// one). The zero extension is load-bearing: the corner-count convolutions sum
// over indices that run past the upper row.
BigInt binomial(long a, long b);

// Rising factorial a(a+1)...(a+k-1); empty product 1 when k = 0.
BigInt pochhammer(long a, long k);

// Memoized Pascal triangle for C(a,b), 0 <= b <= a <= a_max().
//
// Grow first, query after: grow() is not safe against concurrent queries,
// but a fully grown table is immutable and fine to share across threads.
// The full triangle is only affordable for small upper indices, so grow()
// refuses a_max beyond kMaxRows; callers fall back to binomial() above,
// which handles arbitrary sizes.
class BinomialTable {
public:
    static constexpr long kMaxRows = 1024;

    BinomialTable() = default;
    explicit BinomialTable(long a_max) { grow(a_max); }

    void grow(long a_max);

    long a_max() const { return static_cast<long>(rows_.size()) - 1; }

    // Zero-extended in b; a must lie within the grown range.
    const BigInt& at(long a, long b) const;

private:
    std::vector<std::vector<BigInt>> rows_;
};

// Per-thread table, grown on demand. Intended for hot loops over small
// indices (grid dimensions, corner counts); a_max must respect kMaxRows.
const BinomialTable& shared_binomials(long a_max);

}  // namespace widthone
