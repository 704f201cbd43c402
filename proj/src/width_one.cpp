#include "widthone/width_one.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "widthone/binomial.hpp"

namespace widthone {

long WidthOneMatrix::sum() const {
    return std::accumulate(entries.begin(), entries.end(), 0L);
}

std::vector<long> WidthOneMatrix::row_sums() const {
    std::vector<long> s(rows, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) s[i] += at(i, j);
    return s;
}

std::vector<long> WidthOneMatrix::col_sums() const {
    std::vector<long> s(cols, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) s[j] += at(i, j);
    return s;
}

bool is_width_one(const WidthOneMatrix& m) {
    // Support coordinates in row-major order; a chain must be weakly
    // increasing in both coordinates, so one pass against the previous
    // support point suffices.
    int prev_i = -1, prev_j = -1;
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) {
            if (m.at(i, j) < 0) return false;
            if (m.at(i, j) == 0) continue;
            if (prev_i >= 0 && j < prev_j) return false;  // same or later row, column went west
            prev_i = i;
            prev_j = j;
        }
    }
    return true;
}

Biword matrix_to_biword(const WidthOneMatrix& m) {
    if (!is_width_one(m)) {
        throw std::invalid_argument("matrix_to_biword: support is not a chain");
    }
    Biword b;
    const long d = m.sum();
    b.top.reserve(d);
    b.bottom.reserve(d);
    // Row-major order of a chain support is the chain order.
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) {
            for (long t = 0; t < m.at(i, j); ++t) {
                b.top.push_back(i + 1);
                b.bottom.push_back(j + 1);
            }
        }
    }
    return b;
}

namespace {

void require_weakly_increasing(const std::vector<int>& row, int bound, const char* which) {
    for (std::size_t l = 0; l < row.size(); ++l) {
        if (row[l] < 1 || row[l] > bound) {
            throw std::invalid_argument(std::string("biword_to_matrix: ") + which + " row entry " +
                                        std::to_string(row[l]) + " out of range 1.." + std::to_string(bound));
        }
        if (l > 0 && row[l] < row[l - 1]) {
            throw std::invalid_argument(std::string("biword_to_matrix: ") + which +
                                        " row is not weakly increasing");
        }
    }
}

}  // namespace

WidthOneMatrix biword_to_matrix(const Biword& b, int rows, int cols) {
    if (b.top.size() != b.bottom.size()) {
        throw std::invalid_argument("biword_to_matrix: rows differ in length");
    }
    require_weakly_increasing(b.top, rows, "top");
    require_weakly_increasing(b.bottom, cols, "bottom");
    WidthOneMatrix m(rows, cols);
    for (std::size_t l = 0; l < b.top.size(); ++l) {
        ++m.at(b.top[l] - 1, b.bottom[l] - 1);
    }
    return m;
}

void for_each_weakly_increasing(long d, int n,
                                const std::function<void(const std::vector<int>&)>& fn) {
    if (d < 0 || n < 1) throw std::invalid_argument("for_each_weakly_increasing: d < 0 or n < 1");
    std::vector<int> seq(static_cast<std::size_t>(d), 1);
    if (d == 0) {
        fn(seq);
        return;
    }
    for (;;) {
        fn(seq);
        // Advance: bump the rightmost entry below n, reset the tail to it.
        long p = d - 1;
        while (p >= 0 && seq[p] == n) --p;
        if (p < 0) return;
        const int v = ++seq[p];
        for (long t = p + 1; t < d; ++t) seq[t] = v;
    }
}

void for_each_biword(long d, int n1, int n2, const std::function<void(const Biword&)>& fn) {
    if (d < 1) throw std::invalid_argument("for_each_biword: d < 1");
    Biword b;
    for_each_weakly_increasing(d, n1, [&](const std::vector<int>& top) {
        b.top = top;
        for_each_weakly_increasing(d, n2, [&](const std::vector<int>& bottom) {
            b.bottom = bottom;
            fn(b);
        });
    });
}

BigInt width_one_count(long d, int n1, int n2) {
    return binomial(d + n1 - 1, d) * binomial(d + n2 - 1, d);
}

SumMatrix sum_all_oracle(long d, int n1, int n2, bool force) {
    const BigInt count = width_one_count(d, n1, n2);
    if (!force && count > kEnumerationGuard) {
        throw FeasibilityError("sum_all_oracle: " + to_decimal(count) + " matrices exceeds the guard of " +
                               std::to_string(kEnumerationGuard) + " (force to override)");
    }
    SumMatrix s(n1, n2, d);
    for_each_biword(d, n1, n2, [&](const Biword& b) {
        for (long l = 0; l < d; ++l) {
            s.at(b.top[l] - 1, b.bottom[l] - 1) += 1;
        }
    });
    s.check_invariants();
    return s;
}

}  // namespace widthone
