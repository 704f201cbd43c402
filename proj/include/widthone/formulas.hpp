#pragma once

#include <string>

#include "widthone/bigint.hpp"
#include "widthone/sum_matrix.hpp"

namespace widthone {

enum class Method { Rsk, Stanley, Oracle, Auto };

Method method_from_string(const std::string& name);
std::string method_name(Method m);

// The (i,j) entry of the sum of all width-one n1 x n2 matrices with entry
// sum d, indices 1-based. Finite-sum form:
//   sum_{k=0}^{d-1} C(i+k-1,k) C(j+k-1,k) C(n1-i+d-k-1,n1-i) C(n2-j+d-k-1,n2-j).
// O(d) terms, each derived from the previous by exact ratio updates.
BigInt entry_rsk(long d, int n1, int n2, int i, int j);

// Same value through the hypergeometric statement form:
//   C(i+d-2,d-1) C(j+d-2,d-1) * 4F3[n1-i+1, n2-j+1, 1-d, 1-d; 1, 2-d-i, 2-d-j; 1].
// Kept as a distinct code path for cross-checking; throws std::logic_error
// if the rational product fails to be an integer.
BigInt entry_rsk_4f3(long d, int n1, int n2, int i, int j);

// Same value through the shelling of the grid order complex:
//   sum_{k=0}^{min(d,n1,n2)-1} C(n1+n2+d-k-2, n1+n2-1)
//       * corner_count_convolution(n1, n2, i, j, k).
// O(min(d,n1,n2)^2) terms; the method of choice when d >> n.
BigInt entry_stanley(long d, int n1, int n2, int i, int j);

// Same value as the coefficient of z^{d-1} in the product of the two
// truncated series with coefficients a_k = C(i+k-1,k) C(j+k-1,k) and
// b_k = C(n1-i+k,k) C(n2-j+k,k). Independent route used by property tests.
BigInt convolution_check(long d, int n1, int n2, int i, int j);

struct SumMatrixOptions {
    // Compute only a fundamental domain and reflect. Off: every entry is
    // computed independently (symmetry self-tests).
    bool use_symmetry = true;
    // Parallel entry assembly; entries are independent pure computations.
    int threads = 1;
    // Lift the enumeration feasibility guard of the oracle method.
    bool force_oracle = false;
};

// Full matrix via the chosen method. Auto picks Rsk when d <= 2*max(n1,n2)
// and Stanley otherwise (tunable crossover heuristic, not a claim).
// Invariants are checked before returning.
SumMatrix sum_matrix(long d, int n1, int n2, Method method, const SumMatrixOptions& opts = {});

}  // namespace widthone
