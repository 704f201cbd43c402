#include "widthone/binomial.hpp"

#include <stdexcept>
#include <string>

namespace widthone {

BigInt binomial(long a, long b) {
    if (a < 0) {
        throw std::invalid_argument("binomial: negative upper index " + std::to_string(a));
    }
    if (b < 0 || b > a) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

BigInt pochhammer(long a, long k) {
    if (k < 0) throw std::invalid_argument("pochhammer: negative length");
    BigInt r(1);
    for (long t = 0; t < k; ++t) {
        r *= a + t;
        if (r == 0) break;  // a factor crossed zero; the tail cannot revive it
    }
    return r;
}

void BinomialTable::grow(long a_max) {
    if (a_max > kMaxRows) {
        throw std::invalid_argument("BinomialTable: a_max " + std::to_string(a_max) +
                                    " exceeds the memoization cap; use binomial() directly");
    }
    for (long a = static_cast<long>(rows_.size()); a <= a_max; ++a) {
        std::vector<BigInt> row(static_cast<std::size_t>(a) + 1);
        row.front() = 1;
        row.back() = 1;
        for (long b = 1; b < a; ++b) {
            row[b] = rows_[a - 1][b - 1] + rows_[a - 1][b];
        }
        rows_.push_back(std::move(row));
    }
}

const BigInt& BinomialTable::at(long a, long b) const {
    static const BigInt zero(0);
    if (a < 0 || a >= static_cast<long>(rows_.size())) {
        throw std::out_of_range("BinomialTable: row " + std::to_string(a) + " not grown");
    }
    if (b < 0 || b > a) return zero;
    return rows_[a][b];
}

const BinomialTable& shared_binomials(long a_max) {
    thread_local BinomialTable table;
    if (table.a_max() < a_max) table.grow(a_max);
    return table;
}

}  // namespace widthone
