#pragma once

#include <vector>

#include "widthone/bigint.hpp"

namespace widthone {

// Entrywise sum of all width-one rows x cols matrices with entry sum d.
//
// Invariants checked by check_invariants():
//   * 180-degree rotation symmetry: S[i][j] == S[rows+1-i][cols+1-j];
//   * transpose symmetry in the square case;
//   * total entry sum == d * C(d+rows-1,d) * C(d+cols-1,d)
//     (each of the enumerated matrices contributes d).
struct SumMatrix {
    int rows = 0;
    int cols = 0;
    long d = 0;
    std::vector<BigInt> entries;  // row-major

    SumMatrix() = default;
    SumMatrix(int r, int c, long d_) : rows(r), cols(c), d(d_), entries(static_cast<std::size_t>(r) * c) {}

    BigInt& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    const BigInt& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }

    BigInt total() const;
    const BigInt& min_entry() const;
    const BigInt& max_entry() const;

    // Throws std::logic_error naming the first violated invariant.
    void check_invariants() const;

    bool operator==(const SumMatrix& other) const = default;
};

}  // namespace widthone
