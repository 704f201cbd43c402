#include "widthone/order_complex.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

#include "widthone/binomial.hpp"

namespace widthone {

std::vector<GridPoint> LatticePath::vertices() const {
    std::vector<GridPoint> v;
    v.reserve(steps.size() + 1);
    int x = 1, y = 1;
    v.emplace_back(x, y);
    for (Step s : steps) {
        if (s == Step::East) ++y; else ++x;
        v.emplace_back(x, y);
    }
    return v;
}

std::string LatticePath::word() const {
    std::string w;
    w.reserve(steps.size());
    for (Step s : steps) w.push_back(s == Step::East ? '1' : '2');
    return w;
}

LatticePath path_from_word(int rows, int cols, const std::string& word) {
    LatticePath p{rows, cols, {}};
    int east = 0, south = 0;
    for (char c : word) {
        if (c == '1') { p.steps.push_back(Step::East); ++east; }
        else if (c == '2') { p.steps.push_back(Step::South); ++south; }
        else throw std::invalid_argument("path_from_word: step characters are '1' (east) and '2' (south)");
    }
    if (east != cols - 1 || south != rows - 1) {
        throw std::invalid_argument("path_from_word: expected " + std::to_string(cols - 1) + " east and " +
                                    std::to_string(rows - 1) + " south steps");
    }
    return p;
}

void for_each_facet_lex(int rows, int cols, const std::function<void(const LatticePath&)>& fn) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("for_each_facet_lex: grid extents must be >= 1");
    LatticePath p{rows, cols, {}};
    // East sorts before south, so the all-east-first word is lex-least and
    // std::next_permutation walks the rest in lex order.
    p.steps.assign(static_cast<std::size_t>(cols - 1), Step::East);
    p.steps.insert(p.steps.end(), static_cast<std::size_t>(rows - 1), Step::South);
    do {
        fn(p);
    } while (std::next_permutation(p.steps.begin(), p.steps.end()));
}

std::vector<GridPoint> corners(const LatticePath& path) {
    std::vector<GridPoint> r;
    int x = 1, y = 1;
    for (std::size_t s = 0; s + 1 < path.steps.size(); ++s) {
        if (path.steps[s] == Step::East) ++y; else ++x;
        if (path.steps[s] == Step::South && path.steps[s + 1] == Step::East) {
            r.emplace_back(x, y);
        }
    }
    return r;
}

BigInt HPolynomial::value_at_one() const {
    BigInt v(0);
    for (const BigInt& c : coeffs) v += c;
    return v;
}

bool HPolynomial::operator==(const HPolynomial& other) const {
    const std::size_t n = std::max(coeffs.size(), other.coeffs.size());
    static const BigInt zero(0);
    for (std::size_t l = 0; l < n; ++l) {
        const BigInt& a = (l < coeffs.size()) ? coeffs[l] : zero;
        const BigInt& b = (l < other.coeffs.size()) ? other.coeffs[l] : zero;
        if (a != b) return false;
    }
    return true;
}

HPolynomial h_poly_shelling(int rows, int cols) {
    HPolynomial h;
    h.coeffs.assign(static_cast<std::size_t>(std::min(rows, cols)), 0);
    for_each_facet_lex(rows, cols, [&](const LatticePath& p) {
        h.coeffs[corners(p).size()] += 1;
    });
    return h;
}

HPolynomial h_poly_closed(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("h_poly_closed: grid extents must be >= 1");
    HPolynomial h;
    const int m = std::min(rows, cols) - 1;
    h.coeffs.reserve(static_cast<std::size_t>(m) + 1);
    for (int l = 0; l <= m; ++l) {
        h.coeffs.push_back(binomial(rows - 1, l) * binomial(cols - 1, l));
    }
    return h;
}

BigInt corner_count_convolution(int n1, int n2, int i, int j, long k) {
    if (i < 1 || i > n1 || j < 1 || j > n2) {
        throw std::invalid_argument("corner_count_convolution: position out of range");
    }
    if (k < 0) return BigInt(0);
    BigInt sum(0);
    if (std::max(n1, n2) <= 128) {
        const BinomialTable& t = shared_binomials(std::max(n1, n2));
        for (long l = 0; l <= k; ++l) {
            sum += t.at(i - 1, l) * t.at(j - 1, l) * t.at(n1 - i, k - l) * t.at(n2 - j, k - l);
        }
    } else {
        for (long l = 0; l <= k; ++l) {
            sum += binomial(i - 1, l) * binomial(j - 1, l) * binomial(n1 - i, k - l) * binomial(n2 - j, k - l);
        }
    }
    return sum;
}

// ---------------------------------------------------------------------------

void SimplicialComplex::validate() const {
    if (facets.empty()) throw std::invalid_argument("SimplicialComplex: no facets");
    const std::size_t m = facets.front().size();
    for (const Face& f : facets) {
        if (f.empty() || f.size() != m) throw std::invalid_argument("SimplicialComplex: not pure");
        for (std::size_t t = 0; t < f.size(); ++t) {
            if (f[t] < 0 || f[t] >= num_vertices) throw std::invalid_argument("SimplicialComplex: vertex out of range");
            if (t > 0 && f[t] <= f[t - 1]) throw std::invalid_argument("SimplicialComplex: facet not strictly increasing");
        }
    }
    for (std::size_t a = 0; a < facets.size(); ++a) {
        for (std::size_t b = 0; b < facets.size(); ++b) {
            if (a != b && std::includes(facets[a].begin(), facets[a].end(),
                                        facets[b].begin(), facets[b].end())) {
                throw std::invalid_argument("SimplicialComplex: facet " + std::to_string(b) +
                                            " contained in facet " + std::to_string(a));
            }
        }
    }
}

std::vector<BigInt> f_vector(const SimplicialComplex& c) {
    c.validate();
    const std::size_t m = c.facets.front().size();
    if (m > 20) throw FeasibilityError("f_vector: facet size beyond closure guard");
    std::set<Face> faces;
    for (const Face& facet : c.facets) {
        const std::uint32_t full = (1u << m) - 1;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            Face f;
            for (std::size_t t = 0; t < m; ++t) {
                if (mask & (1u << t)) f.push_back(facet[t]);
            }
            faces.insert(std::move(f));
            if (faces.size() > (1u << 20)) {
                throw FeasibilityError("f_vector: downward closure exceeds 2^20 faces");
            }
        }
    }
    std::vector<BigInt> f(m, BigInt(0));
    for (const Face& face : faces) f[face.size() - 1] += 1;
    return f;
}

HPolynomial h_from_f(const std::vector<BigInt>& f, int m) {
    if (static_cast<int>(f.size()) != m) {
        throw std::invalid_argument("h_from_f: expected f_0..f_{m-1}");
    }
    // h_l = sum_{i=0}^{l} (-1)^{l-i} C(m-i, l-i) f_{i-1}, with f_{-1} = 1.
    HPolynomial h;
    h.coeffs.assign(static_cast<std::size_t>(m) + 1, 0);
    for (int l = 0; l <= m; ++l) {
        BigInt acc(0);
        for (int i = 0; i <= l; ++i) {
            const BigInt fi = (i == 0) ? BigInt(1) : f[i - 1];
            BigInt term = binomial(m - i, l - i) * fi;
            if ((l - i) % 2 != 0) term = -term;
            acc += term;
        }
        h.coeffs[l] = acc;
    }
    return h;
}

std::vector<BigInt> f_from_h(const HPolynomial& h, int m) {
    if (static_cast<int>(h.coeffs.size()) > m + 1) {
        throw std::invalid_argument("f_from_h: h has more than m+1 coefficients");
    }
    // f_{i-1} = sum_l C(m-l, i-l) h_l; the i = 0 case recovers f_{-1} = h_0.
    std::vector<BigInt> f(m, BigInt(0));
    for (int i = 1; i <= m; ++i) {
        BigInt acc(0);
        for (int l = 0; l < static_cast<int>(h.coeffs.size()); ++l) {
            acc += binomial(m - l, i - l) * h.coeffs[l];
        }
        f[i - 1] = acc;
    }
    return f;
}

HPolynomial ShellingCheck::h_polynomial() const {
    std::size_t deg = 0;
    for (const Face& r : restrictions) deg = std::max(deg, r.size());
    HPolynomial h;
    h.coeffs.assign(deg + 1, 0);
    for (const Face& r : restrictions) h.coeffs[r.size()] += 1;
    return h;
}

ShellingCheck verify_shelling(const SimplicialComplex& c, const std::vector<std::size_t>& facet_order) {
    c.validate();
    if (facet_order.size() != c.facets.size()) {
        throw std::invalid_argument("verify_shelling: order must list every facet once");
    }
    {
        std::vector<bool> seen(c.facets.size(), false);
        for (std::size_t idx : facet_order) {
            if (idx >= c.facets.size() || seen[idx]) {
                throw std::invalid_argument("verify_shelling: order is not a permutation of the facets");
            }
            seen[idx] = true;
        }
    }
    const std::size_t m = c.facets.front().size();
    if (m > 20) throw FeasibilityError("verify_shelling: facet size beyond subset-search guard");

    ShellingCheck out;
    for (std::size_t pos = 0; pos < facet_order.size(); ++pos) {
        const Face& facet = c.facets[facet_order[pos]];

        // Old faces are exactly the subsets of the intersections with the
        // earlier facets, as bitmasks relative to this facet.
        std::vector<std::uint32_t> inter;
        inter.reserve(pos);
        for (std::size_t prev = 0; prev < pos; ++prev) {
            const Face& other = c.facets[facet_order[prev]];
            std::uint32_t mask = 0;
            for (std::size_t t = 0; t < m; ++t) {
                if (std::binary_search(other.begin(), other.end(), facet[t])) mask |= 1u << t;
            }
            inter.push_back(mask);
        }
        auto is_old = [&](std::uint32_t mask) {
            for (std::uint32_t im : inter) {
                if ((mask & ~im) == 0) return true;
            }
            return false;
        };

        // Minimal new faces: new, with every one-smaller subset old.
        std::vector<std::uint32_t> minimal;
        const std::uint32_t full = (1u << m) - 1;
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            if (is_old(mask)) continue;
            bool minimal_new = true;
            for (std::size_t t = 0; t < m && minimal_new; ++t) {
                const std::uint32_t bit = 1u << t;
                if ((mask & bit) && !is_old(mask & ~bit)) minimal_new = false;
            }
            if (minimal_new) minimal.push_back(mask);
            if (minimal.size() > 1) break;
        }

        auto to_face = [&](std::uint32_t mask) {
            Face f;
            for (std::size_t t = 0; t < m; ++t) {
                if (mask & (1u << t)) f.push_back(facet[t]);
            }
            return f;
        };

        if (minimal.size() != 1) {
            out.ok = false;
            out.failed_index = pos;
            for (std::uint32_t mask : minimal) out.minimal_new_faces.push_back(to_face(mask));
            return out;
        }
        out.restrictions.push_back(to_face(minimal.front()));
    }
    out.ok = true;
    return out;
}

SimplicialComplex grid_order_complex(int rows, int cols) {
    SimplicialComplex c;
    c.num_vertices = rows * cols;
    for_each_facet_lex(rows, cols, [&](const LatticePath& p) {
        Face f;
        for (GridPoint v : p.vertices()) {
            f.push_back((v.first - 1) * cols + (v.second - 1));
        }
        std::sort(f.begin(), f.end());
        c.facets.push_back(std::move(f));
    });
    return c;
}

}  // namespace widthone
