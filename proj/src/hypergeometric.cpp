#include "widthone/hypergeometric.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace widthone {

BigRat f43_unit(long a1, long a2, long a3, long a4, long b1, long b2, long b3) {
    const std::array<long, 4> upper{a1, a2, a3, a4};
    const std::array<long, 3> lower{b1, b2, b3};

    // Last index with a possibly nonzero term: the smallest -a over
    // nonpositive upper parameters a.
    long k_max = -1;
    for (long a : upper) {
        if (a <= 0 && (k_max < 0 || -a < k_max)) k_max = -a;
    }
    if (k_max < 0) {
        throw std::invalid_argument("f43_unit: no nonpositive upper parameter, series does not terminate");
    }

    BigRat sum(1);   // k = 0 term
    BigRat term(1);
    for (long k = 0; k < k_max; ++k) {
        BigInt num(1);
        BigInt den(k + 1);
        for (long a : upper) num *= a + k;
        for (long b : lower) {
            if (b + k == 0) {
                throw std::domain_error("f43_unit: zero denominator factor from lower parameter " +
                                        std::to_string(b) + " before termination");
            }
            den *= b + k;
        }
        BigRat ratio(num, den);
        ratio.canonicalize();
        term *= ratio;
        sum += term;
    }
    return sum;
}

}  // namespace widthone
