#pragma once

#include "widthone/bigint.hpp"

namespace widthone {

// Terminating generalized hypergeometric sum
//
//   4F3[a1,a2,a3,a4; b1,b2,b3; 1]
//     = sum_k (a1)_k (a2)_k (a3)_k (a4)_k / ((b1)_k (b2)_k (b3)_k k!),
//
// evaluated as an exact rational at unit argument. At least one upper
// parameter must be a nonpositive integer so the series terminates
// (std::invalid_argument otherwise), and every nonpositive lower parameter
// must stay nonzero over the surviving terms (std::domain_error if a zero
// denominator factor is reached before termination).
//
// Terms are built incrementally: term_{k+1} = term_k * prod(a+k)/(prod(b+k)(k+1)).
// Non-unit arguments are out of scope.
BigRat f43_unit(long a1, long a2, long a3, long a4, long b1, long b2, long b3);

}  // namespace widthone
