// widthone: exact sums of width-one matrices, grid h-polynomials, and mean
// earth mover's distance for Monge costs.
//
// Exit codes: 0 success, 1 usage error, 2 verification mismatch,
// 3 feasibility-guard refusal.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "widthone/bench.hpp"
#include "widthone/binomial.hpp"
#include "widthone/formulas.hpp"
#include "widthone/order_complex.hpp"
#include "widthone/render.hpp"
#include "widthone/transport.hpp"
#include "widthone/verify.hpp"
#include "widthone/width_one.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitRefused = 3;

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << text;
}

widthone::CostMatrix load_cost(const std::string& cost, int n) {
    if (cost == "l1") return widthone::CostMatrix::l1(n);
    if (cost.rfind("file:", 0) == 0) {
        const std::string path = cost.substr(5);
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open cost file '" + path + "'");
        widthone::CostMatrix c = widthone::parse_cost_matrix(in);
        if (c.rows != n) {
            throw std::invalid_argument("cost file is " + std::to_string(c.rows) + "x" +
                                        std::to_string(c.cols) + ", expected " + std::to_string(n) +
                                        "x" + std::to_string(n));
        }
        return c;
    }
    throw std::invalid_argument("cost must be 'l1' or 'file:PATH'");
}

std::string rational_string(const widthone::BigRat& q) {
    std::ostringstream out;
    out << q;
    return out.str();
}

struct SumMatrixArgs {
    long d = 0;
    int n = 0, rows = 0, cols = 0;
    std::string method = "auto", format = "pretty", output;
    int threads = 1;
    bool no_symmetry = false, force = false;

    void resolve_dims() {
        if (n > 0 && (rows > 0 || cols > 0)) {
            throw CLI::ValidationError("--n conflicts with --rows/--cols");
        }
        if (n > 0) {
            rows = cols = n;
        } else if (rows <= 0 || cols <= 0) {
            throw CLI::ValidationError("need --n, or both --rows and --cols");
        }
    }
};

}  // namespace

int main(int argc, char** argv) {
    using namespace widthone;

    CLI::App app{"Exact sums of width-one matrices and mean earth mover's distance"};
    app.require_subcommand(1);

    // --- sum-matrix ------------------------------------------------------
    SumMatrixArgs sm;
    CLI::App* sum_cmd = app.add_subcommand("sum-matrix", "Compute the full sum matrix for (d, n)");
    sum_cmd->add_option("--d", sm.d, "Total entry sum d")->required()->check(CLI::PositiveNumber);
    sum_cmd->add_option("--n", sm.n, "Square dimension n");
    sum_cmd->add_option("--rows", sm.rows, "Row count (rectangular)");
    sum_cmd->add_option("--cols", sm.cols, "Column count (rectangular)");
    sum_cmd->add_option("--method", sm.method, "rsk | stanley | oracle | auto (default auto)");
    sum_cmd->add_option("--format", sm.format, "pretty | csv | json (default pretty)");
    sum_cmd->add_option("--output", sm.output, "Write to file instead of stdout");
    sum_cmd->add_option("--threads", sm.threads, "Parallel entry assembly (default 1)")
        ->check(CLI::Range(1, 256));
    sum_cmd->add_flag("--no-symmetry", sm.no_symmetry, "Compute every entry independently");
    sum_cmd->add_flag("--force", sm.force, "Override the oracle enumeration guard");

    // --- plot-data -------------------------------------------------------
    struct {
        long d = 0;
        int n = 0;
        std::string kind = "matrix", output;
    } pd;
    CLI::App* plot_cmd = app.add_subcommand("plot-data", "Emit (i,j,value,log10) rows for external plotting");
    plot_cmd->add_option("--d", pd.d, "Total entry sum d")->required()->check(CLI::PositiveNumber);
    plot_cmd->add_option("--n", pd.n, "Square dimension n")->required()->check(CLI::PositiveNumber);
    plot_cmd->add_option("--kind", pd.kind, "matrix | contour (header hint only)");
    plot_cmd->add_option("--output", pd.output, "Write to file instead of stdout");

    // --- mean-emd --------------------------------------------------------
    struct {
        long d = 0;
        int n = 0;
        std::string cost = "l1", format = "pretty", output;
        int precision = 4;
        bool oracle = false, unchecked = false;
    } me;
    CLI::App* emd_cmd = app.add_subcommand("mean-emd", "Mean earth mover's distance over all margin pairs");
    emd_cmd->add_option("--d", me.d, "Histogram mass d")->required()->check(CLI::PositiveNumber);
    emd_cmd->add_option("--n", me.n, "Number of bins n")->required()->check(CLI::PositiveNumber);
    emd_cmd->add_option("--cost", me.cost, "'l1' or 'file:PATH' (default l1)");
    emd_cmd->add_option("--format", me.format, "pretty | csv | json (default pretty)");
    emd_cmd->add_option("--precision", me.precision, "Significant digits of the decimal rendering (default 4)")
        ->check(CLI::Range(1, 50));
    emd_cmd->add_option("--output", me.output, "Write to file instead of stdout");
    emd_cmd->add_flag("--oracle", me.oracle, "Also brute-force the mean and require exact agreement");
    emd_cmd->add_flag("--unchecked", me.unchecked,
                      "Skip the Monge check; result is labeled as mean NW-plan cost");

    // --- enumerate -------------------------------------------------------
    struct {
        long d = 0;
        int n = 0, rows = 0, cols = 0;
        std::string what = "matrices", output;
        bool force = false;
    } en;
    CLI::App* enum_cmd = app.add_subcommand("enumerate", "Dump all width-one matrices or their biwords");
    enum_cmd->add_option("--d", en.d, "Total entry sum d")->required()->check(CLI::PositiveNumber);
    enum_cmd->add_option("--n", en.n, "Square dimension n");
    enum_cmd->add_option("--rows", en.rows, "Row count (rectangular)");
    enum_cmd->add_option("--cols", en.cols, "Column count (rectangular)");
    enum_cmd->add_option("--what", en.what, "matrices | biwords (default matrices)");
    enum_cmd->add_option("--output", en.output, "Write to file instead of stdout");
    enum_cmd->add_flag("--force", en.force, "Override the enumeration guard");

    // --- h-poly ----------------------------------------------------------
    struct {
        int i = 0, j = 0;
        std::string method = "closed";
    } hp;
    CLI::App* hp_cmd = app.add_subcommand("h-poly", "h-polynomial coefficients of the grid order complex");
    hp_cmd->add_option("--i", hp.i, "Grid rows")->required()->check(CLI::PositiveNumber);
    hp_cmd->add_option("--j", hp.j, "Grid columns")->required()->check(CLI::PositiveNumber);
    hp_cmd->add_option("--method", hp.method, "closed | shelling (default closed)");

    // --- verify ----------------------------------------------------------
    struct {
        long d_max = 4;
        int n_max = 3;
        bool no_oracle = false;
    } vf;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Cross-check the formulas against each other and the oracles");
    verify_cmd->add_option("--d-max", vf.d_max, "Largest d to check (default 4)")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--n-max", vf.n_max, "Largest n to check (default 3)")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--no-oracle", vf.no_oracle, "Skip enumeration-backed checks");

    // --- bench -----------------------------------------------------------
    struct {
        std::string fixed = "d";
        long value = 0;
        std::vector<long> sweep;
        std::string methods = "rsk,stanley", output;
        int reps = 3;
        bool no_monotone = false;
    } bn;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Time full-matrix computation per method over a sweep");
    bench_cmd->add_option("--fixed", bn.fixed, "Which parameter stays fixed: d | n (default d)");
    bench_cmd->add_option("--value", bn.value, "Value of the fixed parameter")->required()->check(CLI::PositiveNumber);
    bench_cmd->add_option("--sweep", bn.sweep, "Values of the swept parameter")->required()->delimiter(',');
    bench_cmd->add_option("--methods", bn.methods, "Comma list among rsk,stanley (default both)");
    bench_cmd->add_option("--reps", bn.reps, "Repetitions per point, median reported (default 3)")
        ->check(CLI::Range(1, 99));
    bench_cmd->add_option("--output", bn.output, "Write CSV to file instead of stdout");
    bench_cmd->add_flag("--no-monotone-check", bn.no_monotone,
                        "Waive the monotone-runtime sanity check (noisy machines)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*sum_cmd) {
            sm.resolve_dims();
            SumMatrixOptions opts;
            opts.use_symmetry = !sm.no_symmetry;
            opts.threads = sm.threads;
            opts.force_oracle = sm.force;
            const SumMatrix s = sum_matrix(sm.d, sm.rows, sm.cols, method_from_string(sm.method), opts);
            emit(render_sum_matrix(s, method_from_string(sm.method), format_from_string(sm.format)), sm.output);
        } else if (*plot_cmd) {
            const SumMatrix s = sum_matrix(pd.d, pd.n, pd.n, Method::Auto);
            emit(plot_data_csv(s, pd.kind), pd.output);
        } else if (*emd_cmd) {
            CostMatrix cost = load_cost(me.cost, me.n);
            if (!me.unchecked && !cost.verify_monge()) {
                const auto v = find_monge_violation(cost);
                std::cerr << "error: cost matrix is not Monge: 2x2 block at rows " << v->first + 1 << "-"
                          << v->first + 2 << ", columns " << v->second + 1 << "-" << v->second + 2
                          << " (use --unchecked for the NW-plan mean)\n";
                return kExitUsage;
            }
            const BigRat mean = mean_emd(me.d, me.n, cost, Method::Auto, me.unchecked);
            const std::string label = me.unchecked ? "mean NW-plan cost" : "mean EMD";
            std::string oracle_exact;
            if (me.oracle) {
                const BigRat reference = mean_emd_oracle(me.d, me.n, cost, me.unchecked);
                oracle_exact = rational_string(reference);
                if (reference != mean) {
                    std::cerr << "error: trace formula " << rational_string(mean)
                              << " != brute-force mean " << oracle_exact << "\n";
                    return kExitMismatch;
                }
            }
            std::ostringstream out;
            const std::string exact = rational_string(mean);
            const std::string approx = approx_decimal(mean, me.precision);
            switch (format_from_string(me.format)) {
                case OutputFormat::Pretty:
                    out << label << " (d=" << me.d << ", n=" << me.n << ", cost=" << me.cost << "): " << exact
                        << " ~= " << approx << "\n";
                    if (me.oracle) out << "brute-force mean agrees: " << oracle_exact << "\n";
                    break;
                case OutputFormat::Csv:
                    out << "exact,approx\n" << exact << "," << approx << "\n";
                    break;
                case OutputFormat::Json: {
                    nlohmann::json payload;
                    payload["d"] = me.d;
                    payload["n"] = me.n;
                    payload["cost"] = me.cost;
                    payload["label"] = label;
                    payload["exact"] = exact;
                    payload["approx"] = approx;
                    if (me.oracle) payload["oracle"] = oracle_exact;
                    out << payload.dump() << "\n";
                    break;
                }
            }
            emit(out.str(), me.output);
        } else if (*enum_cmd) {
            SumMatrixArgs dims;
            dims.d = en.d;
            dims.n = en.n;
            dims.rows = en.rows;
            dims.cols = en.cols;
            dims.resolve_dims();
            const BigInt count = width_one_count(en.d, dims.rows, dims.cols);
            if (!en.force && count > kEnumerationGuard) {
                throw FeasibilityError("enumerate: " + to_decimal(count) + " objects exceeds the guard of " +
                                       std::to_string(kEnumerationGuard) + " (--force to override)");
            }
            std::ostringstream out;
            if (en.what == "biwords") {
                for_each_biword(en.d, dims.rows, dims.cols, [&](const Biword& b) {
                    for (std::size_t l = 0; l < b.top.size(); ++l) out << (l ? " " : "") << b.top[l];
                    out << " | ";
                    for (std::size_t l = 0; l < b.bottom.size(); ++l) out << (l ? " " : "") << b.bottom[l];
                    out << "\n";
                });
            } else if (en.what == "matrices") {
                for_each_biword(en.d, dims.rows, dims.cols, [&](const Biword& b) {
                    const WidthOneMatrix m = biword_to_matrix(b, dims.rows, dims.cols);
                    out << "[";
                    for (int i = 0; i < m.rows; ++i) {
                        out << (i ? "," : "") << "[";
                        for (int j = 0; j < m.cols; ++j) out << (j ? "," : "") << m.at(i, j);
                        out << "]";
                    }
                    out << "]\n";
                });
            } else {
                throw std::invalid_argument("--what must be 'matrices' or 'biwords'");
            }
            emit(out.str(), en.output);
        } else if (*hp_cmd) {
            HPolynomial h;
            if (hp.method == "closed") {
                h = h_poly_closed(hp.i, hp.j);
            } else if (hp.method == "shelling") {
                const BigInt facets = binomial(hp.i + hp.j - 2, hp.i - 1);
                if (facets > kEnumerationGuard) {
                    throw FeasibilityError("h-poly: " + to_decimal(facets) +
                                           " facets exceeds the enumeration guard; use --method closed");
                }
                h = h_poly_shelling(hp.i, hp.j);
            } else {
                throw std::invalid_argument("--method must be 'closed' or 'shelling'");
            }
            std::ostringstream out;
            for (std::size_t l = 0; l < h.coeffs.size(); ++l) {
                out << (l ? " " : "") << to_decimal(h.coeffs[l]);
            }
            out << "\n";
            std::cout << out.str();
        } else if (*verify_cmd) {
            const VerifyReport report = run_verify(vf.d_max, vf.n_max, !vf.no_oracle);
            for (const CheckResult& c : report.checks) {
                std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
            }
            if (!report.all_passed()) return kExitMismatch;
        } else if (*bench_cmd) {
            BenchPlan plan;
            plan.fixed = bn.fixed.empty() ? 'd' : bn.fixed[0];
            plan.fixed_value = bn.value;
            plan.sweep = bn.sweep;
            plan.repetitions = bn.reps;
            plan.methods.clear();
            std::istringstream ms(bn.methods);
            std::string item;
            while (std::getline(ms, item, ',')) {
                if (!item.empty()) plan.methods.push_back(method_from_string(item));
            }
            const std::vector<BenchRow> rows = run_bench(plan);
            emit(bench_csv(rows), bn.output);
            if (!bn.no_monotone) {
                // Points under a millisecond are below the timing noise floor
                // and are not compared.
                constexpr double kNoiseFloor = 1e-3;
                for (Method m : plan.methods) {
                    double prev = -1.0;
                    long prev_value = 0;
                    for (const BenchRow& r : rows) {
                        if (r.method != m) continue;
                        if (prev >= kNoiseFloor && r.seconds >= kNoiseFloor && r.seconds < 0.8 * prev) {
                            std::cerr << "warning: runtime not monotone for " << method_name(m) << " between "
                                      << prev_value << " and " << r.sweep_value
                                      << " (waive with --no-monotone-check)\n";
                            return kExitMismatch;
                        }
                        prev = r.seconds;
                        prev_value = r.sweep_value;
                    }
                }
            }
        }
        return kExitOk;
    } catch (const FeasibilityError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefused;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
