#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "widthone/binomial.hpp"
#include "widthone/formulas.hpp"
#include "widthone/hypergeometric.hpp"
#include "widthone/order_complex.hpp"
#include "widthone/render.hpp"
#include "widthone/transport.hpp"
#include "widthone/width_one.hpp"

namespace py = pybind11;
using namespace widthone;

namespace {

// Exact integers cross the boundary as python ints via their decimal form.
py::object to_py_int(const BigInt& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(to_decimal(v).c_str(), nullptr, 10));
}

py::object to_py_fraction(const BigRat& q) {
    static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
    return fraction_type(to_py_int(q.get_num()), to_py_int(q.get_den()));
}

py::list matrix_to_list(const SumMatrix& s) {
    py::list rows;
    for (int i = 0; i < s.rows; ++i) {
        py::list row;
        for (int j = 0; j < s.cols; ++j) row.append(to_py_int(s.at(i, j)));
        rows.append(row);
    }
    return rows;
}

py::list plan_to_list(const WidthOneMatrix& m) {
    py::list rows;
    for (int i = 0; i < m.rows; ++i) {
        py::list row;
        for (int j = 0; j < m.cols; ++j) row.append(m.at(i, j));
        rows.append(row);
    }
    return rows;
}

WidthOneMatrix matrix_from_rows(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) throw std::invalid_argument("matrix must have at least one row");
    WidthOneMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols) {
            throw std::invalid_argument("ragged matrix rows");
        }
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

// Cost entries arrive as int, Fraction, or string ("p/q", "0.25"); their
// str() form is parsed exactly. Binary floats are not accepted.
CostMatrix cost_from_object(const py::object& rows_obj) {
    std::vector<std::vector<BigRat>> rows;
    for (const auto& row_handle : rows_obj) {
        std::vector<BigRat> row;
        for (const auto& cell : row_handle) {
            if (py::isinstance<py::float_>(cell)) {
                throw std::invalid_argument("cost entries must be exact: int, Fraction, or string");
            }
            row.push_back(parse_rational_token(py::str(cell).cast<std::string>()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("cost matrix must have rows");
    const int n1 = static_cast<int>(rows.size());
    const int n2 = static_cast<int>(rows.front().size());
    CostMatrix c(n1, n2);
    for (int i = 0; i < n1; ++i) {
        if (static_cast<int>(rows[i].size()) != n2) throw std::invalid_argument("ragged cost matrix");
        for (int j = 0; j < n2; ++j) c.at(i, j) = rows[i][j];
    }
    return c;
}

CostMatrix cost_from_name_or_rows(const py::object& cost, int n) {
    if (py::isinstance<py::str>(cost)) {
        const auto name = cost.cast<std::string>();
        if (name == "l1") return CostMatrix::l1(n);
        throw std::invalid_argument("named costs: 'l1'");
    }
    return cost_from_object(cost);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact sums of width-one matrices and mean earth mover's distance";

    py::register_exception<FeasibilityError>(m, "FeasibilityError", PyExc_RuntimeError);

    m.def("binomial", [](long a, long b) { return to_py_int(binomial(a, b)); },
          py::arg("a"), py::arg("b"),
          "C(a,b), zero when b < 0 or b > a");
    m.def("pochhammer", [](long a, long k) { return to_py_int(pochhammer(a, k)); },
          py::arg("a"), py::arg("k"),
          "Rising factorial a(a+1)...(a+k-1)");
    m.def("f43_unit",
          [](long a1, long a2, long a3, long a4, long b1, long b2, long b3) {
              return to_py_fraction(f43_unit(a1, a2, a3, a4, b1, b2, b3));
          },
          py::arg("a1"), py::arg("a2"), py::arg("a3"), py::arg("a4"),
          py::arg("b1"), py::arg("b2"), py::arg("b3"),
          "Terminating 4F3 at unit argument, as an exact Fraction");

    m.def("entry_rsk", [](long d, int n1, int n2, int i, int j) { return to_py_int(entry_rsk(d, n1, n2, i, j)); },
          py::arg("d"), py::arg("n1"), py::arg("n2"), py::arg("i"), py::arg("j"));
    m.def("entry_rsk_4f3",
          [](long d, int n1, int n2, int i, int j) { return to_py_int(entry_rsk_4f3(d, n1, n2, i, j)); },
          py::arg("d"), py::arg("n1"), py::arg("n2"), py::arg("i"), py::arg("j"));
    m.def("entry_stanley",
          [](long d, int n1, int n2, int i, int j) { return to_py_int(entry_stanley(d, n1, n2, i, j)); },
          py::arg("d"), py::arg("n1"), py::arg("n2"), py::arg("i"), py::arg("j"));
    m.def("convolution_check",
          [](long d, int n1, int n2, int i, int j) { return to_py_int(convolution_check(d, n1, n2, i, j)); },
          py::arg("d"), py::arg("n1"), py::arg("n2"), py::arg("i"), py::arg("j"));

    m.def("sum_matrix",
          [](long d, int rows, int cols, const std::string& method, bool use_symmetry, int threads,
             bool force_oracle) {
              SumMatrixOptions opts;
              opts.use_symmetry = use_symmetry;
              opts.threads = threads;
              opts.force_oracle = force_oracle;
              return matrix_to_list(sum_matrix(d, rows, cols, method_from_string(method), opts));
          },
          py::arg("d"), py::arg("rows"), py::arg("cols"), py::arg("method") = "auto",
          py::arg("use_symmetry") = true, py::arg("threads") = 1, py::arg("force_oracle") = false,
          "Full sum matrix as nested lists of python ints");

    m.def("width_one_count", [](long d, int n1, int n2) { return to_py_int(width_one_count(d, n1, n2)); },
          py::arg("d"), py::arg("n1"), py::arg("n2"));
    m.def("is_width_one",
          [](const std::vector<std::vector<long>>& rows) { return is_width_one(matrix_from_rows(rows)); },
          py::arg("matrix"));
    m.def("matrix_to_biword",
          [](const std::vector<std::vector<long>>& rows) {
              const Biword b = matrix_to_biword(matrix_from_rows(rows));
              return py::make_tuple(b.top, b.bottom);
          },
          py::arg("matrix"), "Pair of weakly increasing rows (top, bottom)");
    m.def("biword_to_matrix",
          [](const std::vector<int>& top, const std::vector<int>& bottom, int rows, int cols) {
              return plan_to_list(biword_to_matrix(Biword{top, bottom}, rows, cols));
          },
          py::arg("top"), py::arg("bottom"), py::arg("rows"), py::arg("cols"));

    m.def("h_poly_closed",
          [](int i, int j) {
              py::list out;
              for (const BigInt& c : h_poly_closed(i, j).coeffs) out.append(to_py_int(c));
              return out;
          },
          py::arg("i"), py::arg("j"), "h-polynomial coefficients of the grid order complex");
    m.def("h_poly_shelling",
          [](int i, int j) {
              py::list out;
              for (const BigInt& c : h_poly_shelling(i, j).coeffs) out.append(to_py_int(c));
              return out;
          },
          py::arg("i"), py::arg("j"));
    m.def("corner_count_convolution",
          [](int n1, int n2, int i, int j, long k) { return to_py_int(corner_count_convolution(n1, n2, i, j, k)); },
          py::arg("n1"), py::arg("n2"), py::arg("i"), py::arg("j"), py::arg("k"));

    m.def("compositions",
          [](long d, int n) {
              std::vector<Composition> out;
              for_each_composition(d, n, [&](const Composition& c) {
                  if (out.size() >= 2'000'000) throw FeasibilityError("compositions: enumeration too large");
                  out.push_back(c);
              });
              return out;
          },
          py::arg("d"), py::arg("n"), "All weak compositions of d into n parts, descending lex");

    m.def("nw_corner",
          [](const Composition& lam, const Composition& mu) { return plan_to_list(nw_corner(lam, mu)); },
          py::arg("supply"), py::arg("demand"), "Greedy northwest-corner transport plan");
    m.def("is_monge", [](const py::object& cost) { return is_monge(cost_from_object(cost)); }, py::arg("cost"));
    m.def("emd",
          [](const Composition& lam, const Composition& mu, const py::object& cost, bool allow_unverified) {
              return to_py_fraction(emd(lam, mu, cost_from_object(cost), allow_unverified));
          },
          py::arg("supply"), py::arg("demand"), py::arg("cost"), py::arg("allow_unverified") = false);
    m.def("mean_emd",
          [](long d, int n, const py::object& cost, const std::string& method) {
              return to_py_fraction(mean_emd(d, n, cost_from_name_or_rows(cost, n), method_from_string(method)));
          },
          py::arg("d"), py::arg("n"), py::arg("cost") = "l1", py::arg("method") = "auto",
          "Mean earth mover's distance over all supply/demand pairs");
    m.def("mean_emd_oracle",
          [](long d, int n, const py::object& cost) {
              return to_py_fraction(mean_emd_oracle(d, n, cost_from_name_or_rows(cost, n)));
          },
          py::arg("d"), py::arg("n"), py::arg("cost") = "l1");
}
