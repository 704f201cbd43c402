#include "widthone/formulas.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "widthone/binomial.hpp"
#include "widthone/hypergeometric.hpp"
#include "widthone/order_complex.hpp"
#include "widthone/width_one.hpp"

namespace widthone {

Method method_from_string(const std::string& name) {
    if (name == "rsk") return Method::Rsk;
    if (name == "stanley") return Method::Stanley;
    if (name == "oracle") return Method::Oracle;
    if (name == "auto") return Method::Auto;
    throw std::invalid_argument("unknown method '" + name + "' (rsk, stanley, oracle, auto)");
}

std::string method_name(Method m) {
    switch (m) {
        case Method::Rsk: return "rsk";
        case Method::Stanley: return "stanley";
        case Method::Oracle: return "oracle";
        case Method::Auto: return "auto";
    }
    throw std::logic_error("method_name: bad enum value");
}

namespace {

void require_entry_args(long d, int n1, int n2, int i, int j) {
    if (d < 1) throw std::invalid_argument("entry: d must be >= 1");
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("entry: dimensions must be >= 1");
    if (i < 1 || i > n1 || j < 1 || j > n2) throw std::invalid_argument("entry: position out of range");
}

// x := x * mul / div, the division known exact. Both factors are positive
// and bounded by d + n, well inside the word range.
void mul_divexact(BigInt& x, long mul, long div) {
    x *= static_cast<unsigned long>(mul);
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(div));
}

}  // namespace

BigInt entry_rsk(long d, int n1, int n2, int i, int j) {
    require_entry_args(d, n1, n2, i, j);
    // Factors at term k, updated by exact ratios:
    //   a = C(i+k-1,k), b = C(j+k-1,k),
    //   c = C(n1-i+d-k-1, n1-i), e = C(n2-j+d-k-1, n2-j).
    BigInt a(1), b(1);
    BigInt c = binomial(n1 - i + d - 1, n1 - i);
    BigInt e = binomial(n2 - j + d - 1, n2 - j);
    BigInt sum(0), term;
    for (long k = 0; k < d; ++k) {
        term = a;
        term *= b;
        term *= c;
        term *= e;
        sum += term;
        if (k + 1 < d) {
            mul_divexact(a, i + k, k + 1);
            mul_divexact(b, j + k, k + 1);
            mul_divexact(c, d - 1 - k, n1 - i + d - k - 1);
            mul_divexact(e, d - 1 - k, n2 - j + d - k - 1);
        }
    }
    return sum;
}

BigInt entry_rsk_4f3(long d, int n1, int n2, int i, int j) {
    require_entry_args(d, n1, n2, i, j);
    const BigRat series = f43_unit(n1 - i + 1, n2 - j + 1, 1 - d, 1 - d,
                                   1, 2 - d - i, 2 - d - j);
    const BigInt prefactor = binomial(i + d - 2, d - 1) * binomial(j + d - 2, d - 1);
    BigRat value(prefactor);
    value *= series;
    if (value.get_den() != 1) {
        throw std::logic_error("entry_rsk_4f3: non-integral value at d=" + std::to_string(d) +
                               " n1=" + std::to_string(n1) + " n2=" + std::to_string(n2) +
                               " i=" + std::to_string(i) + " j=" + std::to_string(j));
    }
    return value.get_num();
}

namespace {

// C(n1+n2+d-k-2, n1+n2-1) for k = 0..min(d,n1,n2)-1; depends only on the
// problem, so full-matrix assembly computes it once and shares it.
std::vector<BigInt> stanley_prefactors(long d, int n1, int n2) {
    const long k_max = std::min({d, static_cast<long>(n1), static_cast<long>(n2)}) - 1;
    std::vector<BigInt> p;
    p.reserve(static_cast<std::size_t>(k_max) + 1);
    p.push_back(binomial(n1 + n2 + d - 2, n1 + n2 - 1));
    for (long k = 0; k < k_max; ++k) {
        BigInt next = p.back();
        mul_divexact(next, d - k - 1, n1 + n2 + d - k - 2);
        p.push_back(std::move(next));
    }
    return p;
}

BigInt entry_stanley_from(const std::vector<BigInt>& prefactors, int n1, int n2, int i, int j) {
    BigInt sum(0);
    for (long k = 0; k < static_cast<long>(prefactors.size()); ++k) {
        sum += prefactors[k] * corner_count_convolution(n1, n2, i, j, k);
    }
    return sum;
}

}  // namespace

BigInt entry_stanley(long d, int n1, int n2, int i, int j) {
    require_entry_args(d, n1, n2, i, j);
    return entry_stanley_from(stanley_prefactors(d, n1, n2), n1, n2, i, j);
}

BigInt convolution_check(long d, int n1, int n2, int i, int j) {
    require_entry_args(d, n1, n2, i, j);
    // Deliberately direct (no incremental updates): an independent route.
    std::vector<BigInt> lower, upper;
    lower.reserve(d);
    upper.reserve(d);
    for (long k = 0; k < d; ++k) {
        lower.push_back(binomial(i + k - 1, k) * binomial(j + k - 1, k));
        upper.push_back(binomial(n1 - i + k, k) * binomial(n2 - j + k, k));
    }
    BigInt coeff(0);
    for (long k = 0; k < d; ++k) {
        coeff += lower[k] * upper[d - 1 - k];
    }
    return coeff;
}

namespace {

// All orbit images of a 1-based cell under the symmetries that preserve the
// sum matrix: 180-degree rotation always, transpose when square.
void assign_orbit(SumMatrix& s, int i, int j, const BigInt& value) {
    const int n1 = s.rows, n2 = s.cols;
    s.at(i - 1, j - 1) = value;
    s.at(n1 - i, n2 - j) = value;
    if (n1 == n2) {
        s.at(j - 1, i - 1) = value;
        s.at(n2 - j, n1 - i) = value;
    }
}

std::vector<std::pair<int, int>> fundamental_domain(int n1, int n2, bool use_symmetry) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= n1; ++i) {
        for (int j = 1; j <= n2; ++j) {
            if (use_symmetry) {
                if (n1 == n2) {
                    if (!(i <= j && i + j <= n1 + 1)) continue;
                } else {
                    // Keep the row-major first half; the rotation supplies the rest.
                    const long self = static_cast<long>(i - 1) * n2 + (j - 1);
                    const long image = static_cast<long>(n1 - i) * n2 + (n2 - j);
                    if (self > image) continue;
                }
            }
            cells.emplace_back(i, j);
        }
    }
    return cells;
}

}  // namespace

SumMatrix sum_matrix(long d, int n1, int n2, Method method, const SumMatrixOptions& opts) {
    if (d < 1 || n1 < 1 || n2 < 1) {
        throw std::invalid_argument("sum_matrix: need d >= 1 and positive dimensions");
    }
    if (method == Method::Auto) {
        method = (d <= 2L * std::max(n1, n2)) ? Method::Rsk : Method::Stanley;
    }
    if (method == Method::Oracle) {
        return sum_all_oracle(d, n1, n2, opts.force_oracle);
    }

    std::function<BigInt(int, int)> entry;
    if (method == Method::Rsk) {
        entry = [d, n1, n2](int i, int j) { return entry_rsk(d, n1, n2, i, j); };
    } else {
        auto prefactors = std::make_shared<const std::vector<BigInt>>(stanley_prefactors(d, n1, n2));
        entry = [prefactors, n1, n2](int i, int j) { return entry_stanley_from(*prefactors, n1, n2, i, j); };
    }
    SumMatrix s(n1, n2, d);
    const auto cells = fundamental_domain(n1, n2, opts.use_symmetry);

    const int threads = std::max(1, opts.threads);
    if (threads == 1) {
        for (auto [i, j] : cells) {
            if (opts.use_symmetry) {
                assign_orbit(s, i, j, entry(i, j));
            } else {
                s.at(i - 1, j - 1) = entry(i, j);
            }
        }
    } else {
        // Orbit cells are disjoint only per source cell; compute into a
        // scratch vector so threads never share a destination.
        std::vector<BigInt> values(cells.size());
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t idx = t; idx < cells.size(); idx += threads) {
                    values[idx] = entry(cells[idx].first, cells[idx].second);
                }
            });
        }
        for (std::thread& th : pool) th.join();
        for (std::size_t idx = 0; idx < cells.size(); ++idx) {
            if (opts.use_symmetry) {
                assign_orbit(s, cells[idx].first, cells[idx].second, values[idx]);
            } else {
                s.at(cells[idx].first - 1, cells[idx].second - 1) = values[idx];
            }
        }
    }

    s.check_invariants();
    return s;
}

}  // namespace widthone
