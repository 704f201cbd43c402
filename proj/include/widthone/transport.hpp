#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "widthone/bigint.hpp"
#include "widthone/formulas.hpp"
#include "widthone/width_one.hpp"

namespace widthone {

// Weak integer composition: n nonnegative parts summing to d.
using Composition = std::vector<long>;

// All C(d+n-1,d) compositions of d into n parts, (d,0,...,0) first,
// descending lexicographic, no duplicates.
void for_each_composition(long d, int n, const std::function<void(const Composition&)>& fn);

BigInt composition_count(long d, int n);  // C(d+n-1, d)

// Exact nonnegative rational costs. monge_verified is a cache of
// verify_monge(); the transport operations re-check when it is unset.
struct CostMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BigRat> entries;  // row-major
    bool monge_verified = false;

    CostMatrix() = default;
    CostMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

    BigRat& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    const BigRat& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }

    bool verify_monge();  // runs is_monge and caches the result

    // C[i][j] = |i - j|, the consecutive-bins l1 cost. Monge.
    static CostMatrix l1(int n);
    static CostMatrix zero(int n);
};

// Adjacent 2x2 submatrix condition C[i][j] + C[i+1][j+1] <= C[i+1][j] + C[i][j+1].
// Equivalent to the fully quantified inequality (i<I, j<J): any wide
// rectangle inequality is a sum of adjacent ones.
bool is_monge(const CostMatrix& c);

// Top-left coordinate (0-based) of the first violating adjacent 2x2 block.
std::optional<std::pair<int, int>> find_monge_violation(const CostMatrix& c);

// The fully quantified form, checked verbatim. Debug aid; refuses n > 8.
bool is_monge_full(const CostMatrix& c);

// Northwest corner rule: greedy transport plan with row sums lambda and
// column sums mu. Output is width-one with entry sum d = sum(lambda).
// Rectangular margins allowed. Throws std::invalid_argument on mismatched
// totals or negative parts. When a step exhausts row and column together,
// the plan advances south; the doubly-exhausted line forces zeros either way.
WidthOneMatrix nw_corner(const Composition& lambda, const Composition& mu);

// Cost of the northwest-corner plan, which is the earth mover's distance
// when the cost has the Monge property. Without a verified Monge cost the
// value is only an upper bound, so the call is rejected unless
// allow_unverified is set (the CLI then labels it "NW-plan cost").
BigRat emd(const Composition& lambda, const Composition& mu, const CostMatrix& c,
           bool allow_unverified = false);

// Mean of emd over all composition pairs, as the trace identity
//   tr(C^T S(d,n)) / C(d+n-1,d)^2,
// computed from sum_matrix. Requires a Monge cost matrix of size n x n
// unless allow_unverified is set, in which case the result is the mean
// northwest-corner plan cost (the bijection is cost-independent, so the
// trace identity still holds; optimality does not).
BigRat mean_emd(long d, int n, const CostMatrix& c, Method method = Method::Auto,
                bool allow_unverified = false);

// Brute-force mean over all C(d+n-1,d)^2 pairs; feasibility guard at 10^6 pairs.
BigRat mean_emd_oracle(long d, int n, const CostMatrix& c, bool allow_unverified = false);

// Plain-text cost matrix: n rows of n whitespace-separated nonnegative
// values, each an integer, a decimal, or a fraction "p/q". Parse errors
// name the 1-based row and column.
CostMatrix parse_cost_matrix(std::istream& in);
BigRat parse_rational_token(const std::string& token);

}  // namespace widthone
