#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <sstream>
#include <vector>

#include "widthone/transport.hpp"
#include "widthone/width_one.hpp"

using namespace widthone;

namespace {

CostMatrix cost_from_rows(const std::vector<std::vector<long>>& rows) {
    CostMatrix c(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < c.rows; ++i)
        for (int j = 0; j < c.cols; ++j) c.at(i, j) = BigRat(rows[i][j]);
    return c;
}

// Random integer Monge matrix: fix the first row and column, then extend
// with nonnegative "slack" in every adjacent 2x2 inequality; shift to keep
// entries nonnegative (a global shift preserves the inequalities).
CostMatrix random_monge(int n, std::mt19937& rng) {
    std::uniform_int_distribution<long> border(0, 9), slack(0, 3);
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (int j = 0; j < n; ++j) m[0][j] = border(rng);
    for (int i = 1; i < n; ++i) m[i][0] = border(rng);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) m[i][j] = m[i - 1][j] + m[i][j - 1] - m[i - 1][j - 1] - slack(rng);
    long min_entry = 0;
    for (const auto& row : m)
        for (long v : row) min_entry = std::min(min_entry, v);
    for (auto& row : m)
        for (long& v : row) v -= min_entry;
    return cost_from_rows(m);
}

// Exhaustive minimum of sum C_ij T_ij over every nonnegative integer matrix
// with the given margins. Independent of the northwest corner rule.
BigRat min_cost_exhaustive(const Composition& lambda, const Composition& mu, const CostMatrix& c) {
    const int n1 = static_cast<int>(lambda.size());
    const int n2 = static_cast<int>(mu.size());
    BigRat best;
    bool found = false;
    WidthOneMatrix plan(n1, n2);
    Composition remaining = mu;

    std::function<void(int)> fill_row = [&](int row) {
        if (row == n1) {
            for (long v : remaining)
                if (v != 0) return;
            BigRat cost(0);
            for (int i = 0; i < n1; ++i)
                for (int j = 0; j < n2; ++j)
                    if (plan.at(i, j) != 0) cost += c.at(i, j) * BigRat(plan.at(i, j));
            if (!found || cost < best) {
                best = cost;
                found = true;
            }
            return;
        }
        // distribute lambda[row] over the columns bounded by remaining demand
        std::function<void(int, long)> place = [&](int col, long left) {
            if (col == n2) {
                if (left == 0) fill_row(row + 1);
                return;
            }
            const long cap = std::min(left, remaining[col]);
            for (long put = 0; put <= cap; ++put) {
                plan.at(row, col) = put;
                remaining[col] -= put;
                place(col + 1, left - put);
                remaining[col] += put;
            }
            plan.at(row, col) = 0;
        };
        place(0, lambda[row]);
    };
    fill_row(0);
    REQUIRE(found);
    return best;
}

}  // namespace

TEST_CASE("composition enumeration") {
    std::vector<Composition> all;
    for_each_composition(1, 2, [&](const Composition& c) { all.push_back(c); });
    CHECK(all == std::vector<Composition>{{1, 0}, {0, 1}});

    long count = 0;
    for_each_composition(2, 2, [&](const Composition&) { ++count; });
    CHECK(count == 3);

    count = 0;
    Composition prev;
    for_each_composition(10, 4, [&](const Composition& c) {
        if (count > 0) CHECK(c < prev);  // strictly descending lex, so no duplicates
        prev = c;
        ++count;
    });
    CHECK(count == 286);
    CHECK(composition_count(10, 4) == 286);
}

TEST_CASE("is_monge") {
    CHECK(is_monge(CostMatrix::l1(5)));
    CHECK(is_monge_full(CostMatrix::l1(8)));
    CHECK(is_monge(CostMatrix::zero(4)));
    const CostMatrix bad = cost_from_rows({{1, 0}, {0, 1}});
    CHECK_FALSE(is_monge(bad));
    CHECK(find_monge_violation(bad) == std::pair<int, int>{0, 0});

    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const CostMatrix c = random_monge(4, rng);
        CHECK(is_monge(c));
        CHECK(is_monge_full(c));
    }
    // adjacent check and the quantified form agree on arbitrary matrices
    std::uniform_int_distribution<long> any(0, 6);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::vector<long>> rows(4, std::vector<long>(4));
        for (auto& r : rows)
            for (long& v : r) v = any(rng);
        const CostMatrix c = cost_from_rows(rows);
        CHECK(is_monge(c) == is_monge_full(c));
    }
}

TEST_CASE("nw_corner reference plans") {
    const WidthOneMatrix plan = nw_corner({3, 2, 3, 2}, {0, 6, 3, 1});
    const std::vector<long> expected = {0, 3, 0, 0,
                                        0, 2, 0, 0,
                                        0, 1, 2, 0,
                                        0, 0, 1, 1};
    CHECK(plan.entries == expected);

    CHECK(nw_corner({7}, {7}).entries == std::vector<long>{7});
    CHECK(nw_corner({1, 1}, {2, 0}).entries == std::vector<long>{1, 0, 1, 0});
    CHECK_THROWS_AS(nw_corner({1, 2}, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(nw_corner({-1, 1}, {0, 0}), std::invalid_argument);
}

TEST_CASE("nw_corner always yields a transport plan") {
    for (long d = 1; d <= 4; ++d) {
        for (int n = 1; n <= 3; ++n) {
            for_each_composition(d, n, [&](const Composition& lambda) {
                for_each_composition(d, n, [&](const Composition& mu) {
                    const WidthOneMatrix t = nw_corner(lambda, mu);
                    CHECK(t.row_sums() == lambda);
                    CHECK(t.col_sums() == mu);
                    CHECK(is_width_one(t));
                    CHECK(t.sum() == d);
                });
            });
        }
    }
    // rectangular margins work too
    const WidthOneMatrix r = nw_corner({2, 1}, {1, 1, 1});
    CHECK(r.row_sums() == Composition{2, 1});
    CHECK(r.col_sums() == Composition{1, 1, 1});
    CHECK(is_width_one(r));
}

TEST_CASE("emd reference values") {
    const CostMatrix l1_4 = CostMatrix::l1(4);
    CHECK(emd({3, 2, 3, 2}, {0, 6, 3, 1}, l1_4) == 5);
    CHECK(emd({1, 0}, {0, 1}, CostMatrix::l1(2)) == 1);
    CHECK(emd({2, 1, 0}, {2, 1, 0}, CostMatrix::l1(3)) == 0);  // equal margins, zero diagonal

    const CostMatrix bad = cost_from_rows({{1, 0}, {0, 1}});
    CHECK_THROWS_AS(emd({1, 0}, {0, 1}, bad), std::invalid_argument);
    CHECK(emd({1, 0}, {0, 1}, bad, /*allow_unverified=*/true) == 0);
}

TEST_CASE("northwest plan is optimal for Monge costs") {
    std::mt19937 rng(99);
    std::vector<CostMatrix> costs;
    for (int n = 1; n <= 3; ++n) costs.push_back(CostMatrix::l1(n));
    for (int trial = 0; trial < 2; ++trial)
        for (int n = 2; n <= 3; ++n) costs.push_back(random_monge(n, rng));

    for (const CostMatrix& c : costs) {
        const int n = c.rows;
        for (long d = 1; d <= 3; ++d) {
            for_each_composition(d, n, [&](const Composition& lambda) {
                for_each_composition(d, n, [&](const Composition& mu) {
                    CHECK(emd(lambda, mu, c) == min_cost_exhaustive(lambda, mu, c));
                });
            });
        }
    }
}

TEST_CASE("mean_emd matches the brute-force oracle exactly") {
    CHECK(mean_emd(1, 2, CostMatrix::l1(2)) == BigRat(1, 2));
    CHECK(mean_emd(3, 3, CostMatrix::zero(3)) == 0);

    std::mt19937 rng(123);
    for (long d = 1; d <= 4; ++d) {
        for (int n = 1; n <= 3; ++n) {
            const CostMatrix l1 = CostMatrix::l1(n);
            CHECK(mean_emd(d, n, l1) == mean_emd_oracle(d, n, l1));
        }
    }
    for (int trial = 0; trial < 5; ++trial) {
        const CostMatrix c = random_monge(3, rng);
        for (long d = 1; d <= 3; ++d) {
            CHECK(mean_emd(d, 3, c) == mean_emd_oracle(d, 3, c));
        }
    }
    CHECK_THROWS_AS(mean_emd_oracle(40, 5, CostMatrix::l1(5)), FeasibilityError);
    const CostMatrix bad = cost_from_rows({{1, 0}, {0, 1}});
    CHECK_THROWS_AS(mean_emd(2, 2, bad), std::invalid_argument);
}

TEST_CASE("cost matrix parsing") {
    std::istringstream ok("0 1 2\n1 0 1\n2 1 0\n");
    const CostMatrix c = parse_cost_matrix(ok);
    CHECK(c.rows == 3);
    CHECK(c.at(0, 2) == 2);

    std::istringstream fractions("0 1/2\n0.25 0\n");
    const CostMatrix f = parse_cost_matrix(fractions);
    CHECK(f.at(0, 1) == BigRat(1, 2));
    CHECK(f.at(1, 0) == BigRat(1, 4));

    std::istringstream short_row("0 1\n1\n");
    CHECK_THROWS_WITH_AS(parse_cost_matrix(short_row), doctest::Contains("row 2"), std::invalid_argument);

    std::istringstream bad_token("0 1\nx 0\n");
    CHECK_THROWS_WITH_AS(parse_cost_matrix(bad_token), doctest::Contains("row 2, column 1"),
                         std::invalid_argument);

    std::istringstream negative("0 -1\n1 0\n");
    CHECK_THROWS_AS(parse_cost_matrix(negative), std::invalid_argument);

    std::istringstream zero_den("0 1/0\n1 0\n");
    CHECK_THROWS_AS(parse_cost_matrix(zero_den), std::invalid_argument);

    std::istringstream empty("\n \n");
    CHECK_THROWS_AS(parse_cost_matrix(empty), std::invalid_argument);
}
