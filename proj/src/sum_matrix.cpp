#include "widthone/sum_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "widthone/binomial.hpp"

namespace widthone {

BigInt SumMatrix::total() const {
    BigInt t(0);
    for (const BigInt& e : entries) t += e;
    return t;
}

const BigInt& SumMatrix::min_entry() const {
    return *std::min_element(entries.begin(), entries.end());
}

const BigInt& SumMatrix::max_entry() const {
    return *std::max_element(entries.begin(), entries.end());
}

void SumMatrix::check_invariants() const {
    if (rows < 1 || cols < 1 || d < 1 || entries.size() != static_cast<std::size_t>(rows) * cols) {
        throw std::logic_error("SumMatrix: malformed dimensions");
    }
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (at(i, j) < 0) throw std::logic_error("SumMatrix: negative entry");
            if (at(i, j) != at(rows - 1 - i, cols - 1 - j)) {
                throw std::logic_error("SumMatrix: 180-degree symmetry violated at (" +
                                       std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            }
            if (rows == cols && at(i, j) != at(j, i)) {
                throw std::logic_error("SumMatrix: transpose symmetry violated at (" +
                                       std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            }
        }
    }
    // Each enumerated matrix contributes its entry sum d.
    const BigInt expected = BigInt(d) * binomial(d + rows - 1, rows - 1) * binomial(d + cols - 1, cols - 1);
    if (total() != expected) {
        throw std::logic_error("SumMatrix: total entry sum mismatch");
    }
}

}  // namespace widthone
