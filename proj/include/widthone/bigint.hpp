#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace widthone {

// Exact arbitrary-precision arithmetic, backed by GMP. Every computation in
// this library is exact; floating point appears only in the output
// formatting layer (render.hpp).
//
// BigInt doubles as the natural-number type: operations documented as
// returning counts always produce nonnegative values.
using BigInt = mpz_class;
using BigRat = mpq_class;

// Refusal of an enumeration whose size exceeds a feasibility guard.
// The CLI maps this to its own exit code.
class FeasibilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline BigInt bigint_from_decimal(const std::string& s) {
    BigInt v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0) {
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    }
    return v;
}

}  // namespace widthone
