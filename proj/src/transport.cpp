#include "widthone/transport.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "widthone/binomial.hpp"

namespace widthone {

void for_each_composition(long d, int n, const std::function<void(const Composition&)>& fn) {
    if (d < 0 || n < 1) throw std::invalid_argument("for_each_composition: d < 0 or n < 1");
    Composition c(n, 0);
    c[0] = d;
    for (;;) {
        fn(c);
        // Descending lex: move one unit from the rightmost movable part and
        // sweep everything to its right back into the next position.
        int p = n - 2;
        while (p >= 0 && c[p] == 0) --p;
        if (p < 0) return;
        const long tail = c[n - 1];
        c[n - 1] = 0;
        --c[p];
        c[p + 1] = tail + 1;
    }
}

BigInt composition_count(long d, int n) { return binomial(d + n - 1, d); }

bool CostMatrix::verify_monge() {
    monge_verified = is_monge(*this);
    return monge_verified;
}

CostMatrix CostMatrix::l1(int n) {
    CostMatrix c(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            c.at(i, j) = BigRat(std::abs(i - j));
        }
    }
    c.monge_verified = true;
    return c;
}

CostMatrix CostMatrix::zero(int n) {
    CostMatrix c(n, n);
    c.monge_verified = true;
    return c;
}

std::optional<std::pair<int, int>> find_monge_violation(const CostMatrix& c) {
    for (int i = 0; i + 1 < c.rows; ++i) {
        for (int j = 0; j + 1 < c.cols; ++j) {
            if (c.at(i, j) + c.at(i + 1, j + 1) > c.at(i + 1, j) + c.at(i, j + 1)) {
                return std::make_pair(i, j);
            }
        }
    }
    return std::nullopt;
}

bool is_monge(const CostMatrix& c) { return !find_monge_violation(c).has_value(); }

bool is_monge_full(const CostMatrix& c) {
    if (c.rows > 8 || c.cols > 8) {
        throw FeasibilityError("is_monge_full: debug check limited to 8x8");
    }
    for (int i = 0; i < c.rows; ++i)
        for (int I = i + 1; I < c.rows; ++I)
            for (int j = 0; j < c.cols; ++j)
                for (int J = j + 1; J < c.cols; ++J)
                    if (c.at(i, j) + c.at(I, J) > c.at(I, j) + c.at(i, J)) return false;
    return true;
}

WidthOneMatrix nw_corner(const Composition& lambda, const Composition& mu) {
    for (long v : lambda)
        if (v < 0) throw std::invalid_argument("nw_corner: negative supply part");
    for (long v : mu)
        if (v < 0) throw std::invalid_argument("nw_corner: negative demand part");
    if (lambda.empty() || mu.empty()) throw std::invalid_argument("nw_corner: empty margins");
    const long total = std::accumulate(lambda.begin(), lambda.end(), 0L);
    if (total != std::accumulate(mu.begin(), mu.end(), 0L)) {
        throw std::invalid_argument("nw_corner: supply and demand totals differ");
    }

    const int n1 = static_cast<int>(lambda.size());
    const int n2 = static_cast<int>(mu.size());
    Composition supply = lambda, demand = mu;
    WidthOneMatrix plan(n1, n2);
    int i = 0, j = 0;
    while (i < n1 && j < n2) {
        const long t = std::min(supply[i], demand[j]);
        plan.at(i, j) = t;
        supply[i] -= t;
        demand[j] -= t;
        if (supply[i] == 0) {
            if (i + 1 < n1) ++i; else ++j;  // south first on simultaneous exhaustion
        } else {
            if (j + 1 < n2) ++j; else ++i;
        }
    }
    return plan;
}

namespace {

BigRat plan_cost(const WidthOneMatrix& plan, const CostMatrix& c) {
    BigRat cost(0);
    for (int i = 0; i < plan.rows; ++i) {
        for (int j = 0; j < plan.cols; ++j) {
            if (plan.at(i, j) != 0) {
                cost += c.at(i, j) * BigRat(plan.at(i, j));
            }
        }
    }
    return cost;
}

void require_monge(const CostMatrix& c, const char* where) {
    if (c.monge_verified || is_monge(c)) return;
    const auto v = find_monge_violation(c);
    throw std::invalid_argument(std::string(where) + ": cost matrix is not Monge (2x2 block at rows " +
                                std::to_string(v->first + 1) + "-" + std::to_string(v->first + 2) +
                                ", columns " + std::to_string(v->second + 1) + "-" +
                                std::to_string(v->second + 2) + ")");
}

}  // namespace

BigRat emd(const Composition& lambda, const Composition& mu, const CostMatrix& c, bool allow_unverified) {
    if (static_cast<int>(lambda.size()) != c.rows || static_cast<int>(mu.size()) != c.cols) {
        throw std::invalid_argument("emd: margin lengths do not match the cost matrix");
    }
    if (!allow_unverified) require_monge(c, "emd");
    return plan_cost(nw_corner(lambda, mu), c);
}

BigRat mean_emd(long d, int n, const CostMatrix& c, Method method, bool allow_unverified) {
    if (c.rows != n || c.cols != n) throw std::invalid_argument("mean_emd: cost matrix must be n x n");
    if (!allow_unverified) require_monge(c, "mean_emd");
    const SumMatrix s = sum_matrix(d, n, n, method);
    BigRat trace(0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            trace += c.at(i, j) * BigRat(s.at(i, j));
        }
    }
    const BigInt pairs = composition_count(d, n);
    const BigInt pairs_sq = pairs * pairs;
    return trace / BigRat(pairs_sq);
}

BigRat mean_emd_oracle(long d, int n, const CostMatrix& c, bool allow_unverified) {
    if (c.rows != n || c.cols != n) throw std::invalid_argument("mean_emd_oracle: cost matrix must be n x n");
    if (!allow_unverified) require_monge(c, "mean_emd_oracle");
    const BigInt count = composition_count(d, n);
    if (count * count > 1'000'000L) {
        throw FeasibilityError("mean_emd_oracle: " + to_decimal(count * count) +
                               " composition pairs exceeds the guard of 1000000");
    }
    BigRat sum(0);
    for_each_composition(d, n, [&](const Composition& lambda) {
        for_each_composition(d, n, [&](const Composition& mu) {
            sum += plan_cost(nw_corner(lambda, mu), c);
        });
    });
    const BigInt pairs_sq = count * count;
    return sum / BigRat(pairs_sq);
}

BigRat parse_rational_token(const std::string& token) {
    if (token.empty()) throw std::invalid_argument("empty value");
    const auto bad = [&] { return std::invalid_argument("bad value '" + token + "'"); };

    if (const auto slash = token.find('/'); slash != std::string::npos) {
        const std::string num = token.substr(0, slash);
        const std::string den = token.substr(slash + 1);
        if (num.empty() || den.empty()) throw bad();
        BigRat q;
        if (mpq_set_str(q.get_mpq_t(), token.c_str(), 10) != 0) throw bad();
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + token + "'");
        q.canonicalize();
        if (q < 0) throw std::invalid_argument("negative cost '" + token + "'");
        return q;
    }

    if (const auto dot = token.find('.'); dot != std::string::npos) {
        // Exact decimal: digits on both sides, scaled by a power of ten.
        const std::string whole = token.substr(0, dot);
        const std::string frac = token.substr(dot + 1);
        const std::string digits = whole + frac;
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) throw bad();
        BigInt num = bigint_from_decimal(digits);
        BigInt den(1);
        for (std::size_t t = 0; t < frac.size(); ++t) den *= 10;
        BigRat q(num, den);
        q.canonicalize();
        return q;
    }

    if (token.find_first_not_of("0123456789") != std::string::npos) throw bad();
    return BigRat(bigint_from_decimal(token));
}

CostMatrix parse_cost_matrix(std::istream& in) {
    std::vector<std::vector<BigRat>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<BigRat> row;
        std::string token;
        while (ls >> token) {
            try {
                row.push_back(parse_rational_token(token));
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("cost matrix row " + std::to_string(rows.size() + 1) +
                                            ", column " + std::to_string(row.size() + 1) + ": " + e.what());
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("cost matrix: no rows");
    const std::size_t n = rows.size();
    for (std::size_t r = 0; r < n; ++r) {
        if (rows[r].size() != n) {
            throw std::invalid_argument("cost matrix row " + std::to_string(r + 1) + ": expected " +
                                        std::to_string(n) + " values, got " + std::to_string(rows[r].size()));
        }
    }
    CostMatrix c(static_cast<int>(n), static_cast<int>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) c.at(static_cast<int>(r), static_cast<int>(s)) = rows[r][s];
    return c;
}

}  // namespace widthone
