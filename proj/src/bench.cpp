#include "widthone/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace widthone {

void BenchPlan::validate() const {
    if (fixed != 'd' && fixed != 'n') throw std::invalid_argument("bench: fixed parameter must be 'd' or 'n'");
    if (fixed_value < 1) throw std::invalid_argument("bench: fixed value must be >= 1");
    if (sweep.empty()) throw std::invalid_argument("bench: empty sweep range");
    for (long v : sweep) {
        if (v < 1) throw std::invalid_argument("bench: sweep values must be >= 1");
        if (fixed == 'd' && v > 10000) throw std::invalid_argument("bench: n sweep value too large");
    }
    if (repetitions < 1) throw std::invalid_argument("bench: repetitions must be >= 1");
    for (Method m : methods) {
        if (m != Method::Rsk && m != Method::Stanley) {
            throw std::invalid_argument("bench: only rsk and stanley are timed");
        }
    }
    if (methods.empty()) throw std::invalid_argument("bench: no methods selected");
}

std::vector<BenchRow> run_bench(const BenchPlan& plan) {
    plan.validate();
    std::vector<BenchRow> rows;
    for (long value : plan.sweep) {
        const long d = (plan.fixed == 'd') ? plan.fixed_value : value;
        const int n = static_cast<int>((plan.fixed == 'd') ? value : plan.fixed_value);
        for (Method m : plan.methods) {
            std::vector<double> times;
            times.reserve(plan.repetitions);
            for (int rep = 0; rep < plan.repetitions; ++rep) {
                const auto start = std::chrono::steady_clock::now();
                const SumMatrix s = sum_matrix(d, n, n, m);
                const auto stop = std::chrono::steady_clock::now();
                if (s.rows != n) throw std::logic_error("bench: bad result");  // keep s alive
                times.push_back(std::chrono::duration<double>(stop - start).count());
            }
            std::sort(times.begin(), times.end());
            rows.push_back({value, m, times[times.size() / 2]});
        }
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "sweep_value,method,seconds\n";
    char buf[32];
    for (const BenchRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%.6f", r.seconds);
        out << r.sweep_value << ',' << method_name(r.method) << ',' << buf << '\n';
    }
    return out.str();
}

}  // namespace widthone
