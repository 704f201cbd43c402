#include "widthone/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "widthone/formulas.hpp"
#include "widthone/golden.hpp"
#include "widthone/order_complex.hpp"
#include "widthone/transport.hpp"
#include "widthone/width_one.hpp"

namespace widthone {

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

std::string instance(long d, int n1, int n2, int i, int j) {
    std::ostringstream out;
    out << "d=" << d << " n1=" << n1 << " n2=" << n2 << " i=" << i << " j=" << j;
    return out.str();
}

CheckResult check_formula_equivalence(long d_max, int n_max) {
    CheckResult r{"formula-equivalence", false, ""};
    long cases = 0;
    for (long d = 1; d <= d_max; ++d) {
        for (int n1 = 1; n1 <= n_max; ++n1) {
            for (int n2 = 1; n2 <= n_max; ++n2) {
                for (int i = 1; i <= n1; ++i) {
                    for (int j = 1; j <= n2; ++j) {
                        const BigInt rsk = entry_rsk(d, n1, n2, i, j);
                        const BigInt stanley = entry_stanley(d, n1, n2, i, j);
                        const BigInt f43 = entry_rsk_4f3(d, n1, n2, i, j);
                        const BigInt conv = convolution_check(d, n1, n2, i, j);
                        if (rsk != stanley || rsk != f43 || rsk != conv) {
                            r.detail = "mismatch at " + instance(d, n1, n2, i, j) + ": rsk=" + to_decimal(rsk) +
                                       " stanley=" + to_decimal(stanley) + " 4f3=" + to_decimal(f43) +
                                       " conv=" + to_decimal(conv);
                            return r;
                        }
                        ++cases;
                    }
                }
            }
        }
    }
    r.passed = true;
    r.detail = std::to_string(cases) + " entries agree across all four routes";
    return r;
}

CheckResult check_known_tables(long d_max) {
    CheckResult r{"known-5x5-tables", false, ""};
    const auto& tables = known_sum_matrices_5();
    const long hi = std::min<long>(d_max, 8);
    for (long d = 1; d <= hi; ++d) {
        for (Method m : {Method::Rsk, Method::Stanley}) {
            const SumMatrix s = sum_matrix(d, 5, 5, m);
            if (s != tables[d - 1]) {
                r.detail = "S(" + std::to_string(d) + ",5) via " + method_name(m) + " differs from the reference table";
                return r;
            }
        }
    }
    r.passed = true;
    r.detail = "d=1.." + std::to_string(hi) + " reproduced by rsk and stanley";
    return r;
}

CheckResult check_enumeration(long d_max, int n_max) {
    CheckResult r{"enumeration-oracle", false, ""};
    long cases = 0;
    for (long d = 1; d <= std::min<long>(d_max, 5); ++d) {
        for (int n = 1; n <= std::min(n_max, 4); ++n) {
            if (width_one_count(d, n, n) > 200'000L) continue;
            const SumMatrix oracle = sum_all_oracle(d, n, n);
            if (oracle != sum_matrix(d, n, n, Method::Rsk) || oracle != sum_matrix(d, n, n, Method::Stanley)) {
                r.detail = "sum mismatch at d=" + std::to_string(d) + " n=" + std::to_string(n);
                return r;
            }
            // Counting law and round-trip through the bijection.
            long seen = 0;
            bool roundtrip_ok = true;
            for_each_biword(d, n, n, [&](const Biword& b) {
                ++seen;
                if (roundtrip_ok) {
                    const WidthOneMatrix m = biword_to_matrix(b, n, n);
                    roundtrip_ok = is_width_one(m) && m.sum() == d && matrix_to_biword(m) == b;
                }
            });
            if (!roundtrip_ok) {
                r.detail = "bijection round-trip failed at d=" + std::to_string(d) + " n=" + std::to_string(n);
                return r;
            }
            if (BigInt(seen) != width_one_count(d, n, n)) {
                r.detail = "count law failed at d=" + std::to_string(d) + " n=" + std::to_string(n);
                return r;
            }
            ++cases;
        }
    }
    r.passed = true;
    r.detail = std::to_string(cases) + " instances enumerated and matched";
    return r;
}

CheckResult check_nw_bijection(long d_max, int n_max) {
    CheckResult r{"nw-corner-bijection", false, ""};
    long cases = 0;
    for (long d = 1; d <= std::min<long>(d_max, 4); ++d) {
        for (int n = 1; n <= std::min(n_max, 3); ++n) {
            std::set<std::vector<long>> plans;
            long pairs = 0;
            for_each_composition(d, n, [&](const Composition& lambda) {
                for_each_composition(d, n, [&](const Composition& mu) {
                    const WidthOneMatrix t = nw_corner(lambda, mu);
                    plans.insert(t.entries);
                    ++pairs;
                });
            });
            std::set<std::vector<long>> matrices;
            for_each_biword(d, n, n, [&](const Biword& b) {
                matrices.insert(biword_to_matrix(b, n, n).entries);
            });
            if (plans != matrices || static_cast<long>(plans.size()) != pairs) {
                r.detail = "northwest-corner image differs from the enumeration at d=" + std::to_string(d) +
                           " n=" + std::to_string(n);
                return r;
            }
            ++cases;
        }
    }
    r.passed = true;
    r.detail = std::to_string(cases) + " margin spaces mapped bijectively";
    return r;
}

CheckResult check_h_polynomials(int n_max) {
    CheckResult r{"h-polynomials", false, ""};
    const int hi = std::max(2, std::min(n_max + 1, 6));
    for (int i = 1; i <= hi; ++i) {
        for (int j = 1; j <= hi; ++j) {
            const HPolynomial closed = h_poly_closed(i, j);
            if (h_poly_shelling(i, j) != closed) {
                r.detail = "shelling accumulation differs from closed form at i=" + std::to_string(i) +
                           " j=" + std::to_string(j);
                return r;
            }
            if (i <= 4 && j <= 4) {
                const SimplicialComplex complex = grid_order_complex(i, j);
                const int m = i + j - 1;
                if (h_from_f(f_vector(complex), m) != closed) {
                    r.detail = "f-vector transform differs at i=" + std::to_string(i) + " j=" + std::to_string(j);
                    return r;
                }
                std::vector<std::size_t> order(complex.facets.size());
                for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
                const ShellingCheck sc = verify_shelling(complex, order);
                if (!sc.ok || !(sc.h_polynomial() == closed)) {
                    r.detail = "lex order is not verified as a shelling at i=" + std::to_string(i) +
                               " j=" + std::to_string(j);
                    return r;
                }
                // Restrictions from the generic search must be the corner sets.
                std::size_t idx = 0;
                bool corners_match = true;
                for_each_facet_lex(i, j, [&](const LatticePath& p) {
                    Face expected;
                    for (GridPoint v : corners(p)) expected.push_back((v.first - 1) * j + (v.second - 1));
                    std::sort(expected.begin(), expected.end());
                    if (sc.restrictions[idx] != expected) corners_match = false;
                    ++idx;
                });
                if (!corners_match) {
                    r.detail = "restriction sets differ from corner sets at i=" + std::to_string(i) +
                               " j=" + std::to_string(j);
                    return r;
                }
            }
        }
    }
    r.passed = true;
    r.detail = "grids up to " + std::to_string(hi) + "x" + std::to_string(hi) + " consistent";
    return r;
}

}  // namespace

VerifyReport run_verify(long d_max, int n_max, bool with_oracle) {
    if (d_max < 1 || n_max < 1) throw std::invalid_argument("verify: bounds must be >= 1");
    VerifyReport report;
    report.checks.push_back(check_formula_equivalence(d_max, n_max));
    if (n_max >= 5) report.checks.push_back(check_known_tables(d_max));
    if (with_oracle) {
        report.checks.push_back(check_enumeration(d_max, n_max));
        report.checks.push_back(check_nw_bijection(d_max, n_max));
    }
    report.checks.push_back(check_h_polynomials(n_max));
    return report;
}

}  // namespace widthone
