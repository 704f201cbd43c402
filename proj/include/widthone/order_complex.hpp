#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "widthone/bigint.hpp"

namespace widthone {

using GridPoint = std::pair<int, int>;  // (x, y), 1-based

// The grid poset {1..rows} x {1..cols} under the product order
// (a, b) <= (a', b') iff a <= a' and b <= b'.
struct GridPoset {
    int rows = 0;
    int cols = 0;

    static bool leq(GridPoint a, GridPoint b) { return a.first <= b.first && a.second <= b.second; }
    static bool comparable(GridPoint a, GridPoint b) { return leq(a, b) || leq(b, a); }
    bool contains(GridPoint v) const {
        return v.first >= 1 && v.first <= rows && v.second >= 1 && v.second <= cols;
    }
};

enum class Step : unsigned char { East = 1, South = 2 };

// Maximal chain in the rows x cols grid, from (1,1) to (rows,cols), encoded
// as its step word: cols-1 east and rows-1 south steps.
struct LatticePath {
    int rows = 0;
    int cols = 0;
    std::vector<Step> steps;

    // The vertex chain, (1,1) first; size rows+cols-1.
    std::vector<GridPoint> vertices() const;

    // Word over {1,2}, east=1 south=2, matching the shelling order key.
    std::string word() const;

    bool operator==(const LatticePath& other) const = default;
};

LatticePath path_from_word(int rows, int cols, const std::string& word);

// All C(rows+cols-2, rows-1) maximal paths, in lexicographic order of their
// step words with east < south. This order is a shelling of the order
// complex, and the restriction of each facet is its corner set.
void for_each_facet_lex(int rows, int cols, const std::function<void(const LatticePath&)>& fn);

// Corners of a path: vertices where a south step ends and an east step
// begins, i.e. (x,y) with both (x-1,y) and (x,y+1) on the path. Equals the
// facet's restriction set under the lexicographic shelling.
std::vector<GridPoint> corners(const LatticePath& path);

// h-polynomial with nonnegative coefficients coeffs[l] = h_l.
struct HPolynomial {
    std::vector<BigInt> coeffs;

    BigInt value_at_one() const;

    // Polynomial equality: trailing zero coefficients do not count. The
    // fixed-length f/h transform can produce them.
    bool operator==(const HPolynomial& other) const;
};

// h_l = number of facets with exactly l corners, accumulated over the lex
// enumeration. Exponential in the grid size; for counting use the closed form.
HPolynomial h_poly_shelling(int rows, int cols);

// Closed form: sum_l C(rows-1,l) C(cols-1,l) t^l.
HPolynomial h_poly_closed(int rows, int cols);

// Coefficient of t^k in h_{i,j}(t) * h_{n1+1-i,n2+1-j}(t):
//   sum_l C(i-1,l) C(j-1,l) C(n1-i,k-l) C(n2-j,k-l).
// Counts facets of the n1 x n2 grid complex through (i,j) whose corner set,
// (i,j) excluded, has size k.
BigInt corner_count_convolution(int n1, int n2, int i, int j, long k);

// ---------------------------------------------------------------------------
// Generic pure simplicial complexes, used to validate the grid shortcuts on
// small instances and to host non-grid examples.

using Face = std::vector<int>;  // strictly increasing vertex ids

struct SimplicialComplex {
    int num_vertices = 0;
    std::vector<Face> facets;

    // Throws std::invalid_argument unless facets are sorted, in range,
    // all the same size (pure), and pairwise non-nested.
    void validate() const;
};

// Counts faces by dimension: result[i] = number of faces of dimension i
// (cardinality i+1). The empty face (f_{-1} = 1) is implicit. Materializes
// the downward closure; refuses complexes generating more than 2^20 faces.
std::vector<BigInt> f_vector(const SimplicialComplex& c);

// h from f for a complex of dimension m-1 (facet cardinality m):
//   sum_l h_l t^l = sum_i f_{i-1} t^i (1-t)^(m-i).
// f holds (f_0..f_{m-1}); f_{-1}=1 is supplied internally.
HPolynomial h_from_f(const std::vector<BigInt>& f, int m);

// Inverse transform; returns (f_0..f_{m-1}).
std::vector<BigInt> f_from_h(const HPolynomial& h, int m);

struct ShellingCheck {
    bool ok = false;
    // One restriction per facet, in shelling order, when ok.
    std::vector<Face> restrictions;
    // On failure: the first offending facet position and its minimal new
    // faces (none, or two or more).
    std::size_t failed_index = 0;
    std::vector<Face> minimal_new_faces;

    HPolynomial h_polynomial() const;  // sum over restrictions of t^|R|
};

// Checks that visiting facets in facet_order gives a shelling: each facet
// must contribute a unique minimal new face relative to the subcomplex
// generated by its predecessors. Brute force over facet subsets; facets of
// more than 20 vertices are refused.
ShellingCheck verify_shelling(const SimplicialComplex& c, const std::vector<std::size_t>& facet_order);

// The order complex of the rows x cols grid poset as a generic complex.
// Vertex id of (x,y) is (x-1)*cols + (y-1); facets in lex shelling order.
SimplicialComplex grid_order_complex(int rows, int cols);

}  // namespace widthone
