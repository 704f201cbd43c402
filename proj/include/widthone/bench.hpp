#pragma once

#include <string>
#include <vector>

#include "widthone/formulas.hpp"

namespace widthone {

// One benchmark sweep: hold d or n fixed, sweep the other, time full-matrix
// computation per method. Exact arithmetic is deterministic, so the median
// over repetitions only filters OS noise.
struct BenchPlan {
    char fixed = 'd';  // 'd' or 'n'
    long fixed_value = 0;
    std::vector<long> sweep;
    std::vector<Method> methods = {Method::Rsk, Method::Stanley};
    int repetitions = 3;

    void validate() const;  // throws std::invalid_argument
};

struct BenchRow {
    long sweep_value = 0;
    Method method = Method::Rsk;
    double seconds = 0.0;  // median wall time
};

// Sequential, symmetry on. Rows ordered sweep-major, then by plan method order.
std::vector<BenchRow> run_bench(const BenchPlan& plan);

// Columns: sweep_value,method,seconds.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace widthone
