#pragma once

#include <string>

#include "widthone/bigint.hpp"
#include "widthone/formulas.hpp"
#include "widthone/sum_matrix.hpp"

namespace widthone {

enum class OutputFormat { Pretty, Csv, Json };

OutputFormat format_from_string(const std::string& name);

// pretty: right-aligned columns. csv: plain comma-separated rows.
// json: {"cols","d","entries","method","rows"} with entries as decimal
// strings (values can run to hundreds of digits). dump(json) of a parsed
// payload is bit-identical to the original.
std::string render_sum_matrix(const SumMatrix& s, Method method, OutputFormat format);

SumMatrix parse_sum_matrix_json(const std::string& text);

// CSV of (i, j, value, log10) rows, 1-based indices, exact decimal value
// plus a floating log10 for external plotting. kind only changes a header
// comment ("matrix" vs "contour").
std::string plot_data_csv(const SumMatrix& s, const std::string& kind);

// Approximate rendering, used only at the output layer. sig_digits
// significant digits, round half away from zero.
std::string approx_decimal(const BigInt& v, int sig_digits);
std::string approx_decimal(const BigRat& v, int sig_digits);

double log10_approx(const BigInt& v);  // v must be positive

// v rounded to two significant figures as mantissa * 10^exponent with
// mantissa in [10, 99]. v must be positive.
std::pair<long, long> round_to_two_significant(const BigInt& v);

}  // namespace widthone
