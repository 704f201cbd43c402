#include "widthone/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace widthone {

OutputFormat format_from_string(const std::string& name) {
    if (name == "pretty") return OutputFormat::Pretty;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown format '" + name + "' (pretty, csv, json)");
}

std::string render_sum_matrix(const SumMatrix& s, Method method, OutputFormat format) {
    std::ostringstream out;
    switch (format) {
        case OutputFormat::Pretty: {
            std::size_t width = 0;
            for (const BigInt& e : s.entries) width = std::max(width, to_decimal(e).size());
            for (int i = 0; i < s.rows; ++i) {
                for (int j = 0; j < s.cols; ++j) {
                    const std::string v = to_decimal(s.at(i, j));
                    out << (j ? " " : "") << std::string(width - v.size(), ' ') << v;
                }
                out << '\n';
            }
            break;
        }
        case OutputFormat::Csv: {
            for (int i = 0; i < s.rows; ++i) {
                for (int j = 0; j < s.cols; ++j) {
                    out << (j ? "," : "") << to_decimal(s.at(i, j));
                }
                out << '\n';
            }
            break;
        }
        case OutputFormat::Json: {
            nlohmann::json payload;
            payload["d"] = s.d;
            payload["rows"] = s.rows;
            payload["cols"] = s.cols;
            payload["method"] = method_name(method);
            auto& entries = payload["entries"] = nlohmann::json::array();
            for (int i = 0; i < s.rows; ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (int j = 0; j < s.cols; ++j) row.push_back(to_decimal(s.at(i, j)));
                entries.push_back(std::move(row));
            }
            out << payload.dump() << '\n';
            break;
        }
    }
    return out.str();
}

SumMatrix parse_sum_matrix_json(const std::string& text) {
    const nlohmann::json payload = nlohmann::json::parse(text);
    SumMatrix s(payload.at("rows").get<int>(), payload.at("cols").get<int>(), payload.at("d").get<long>());
    const auto& entries = payload.at("entries");
    if (static_cast<int>(entries.size()) != s.rows) {
        throw std::invalid_argument("sum matrix json: wrong row count");
    }
    for (int i = 0; i < s.rows; ++i) {
        if (static_cast<int>(entries[i].size()) != s.cols) {
            throw std::invalid_argument("sum matrix json: wrong column count in row " + std::to_string(i + 1));
        }
        for (int j = 0; j < s.cols; ++j) {
            s.at(i, j) = bigint_from_decimal(entries[i][j].get<std::string>());
        }
    }
    return s;
}

std::string plot_data_csv(const SumMatrix& s, const std::string& kind) {
    if (kind != "matrix" && kind != "contour") {
        throw std::invalid_argument("plot kind must be 'matrix' or 'contour'");
    }
    std::ostringstream out;
    out << "# kind=" << kind << " d=" << s.d << " rows=" << s.rows << " cols=" << s.cols << '\n';
    out << "i,j,value,log10\n";
    char buf[32];
    for (int i = 0; i < s.rows; ++i) {
        for (int j = 0; j < s.cols; ++j) {
            std::snprintf(buf, sizeof buf, "%.6f", log10_approx(s.at(i, j)));
            out << (i + 1) << ',' << (j + 1) << ',' << to_decimal(s.at(i, j)) << ',' << buf << '\n';
        }
    }
    return out.str();
}

double log10_approx(const BigInt& v) {
    if (v <= 0) throw std::invalid_argument("log10_approx: value must be positive");
    signed long exp2 = 0;
    const double m = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log10(m) + static_cast<double>(exp2) * std::log10(2.0);
}

namespace {

// First sig_digits digits of |num/den| with half-away-from-zero rounding,
// plus the power-of-ten exponent of the leading digit. The digit string may
// carry one extra leading digit after a rounding carry ("99" -> "100").
std::pair<std::string, long> scaled_digits(const BigInt& num, const BigInt& den, int sig_digits) {
    BigInt a = abs(num);
    // exponent e: den*10^e <= a < den*10^(e+1)
    long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10)) + 1;
    auto scaled_below = [&](long exp) {  // true iff a < den * 10^exp ... exp may be negative
        BigInt lhs = a, rhs = den;
        if (exp >= 0) {
            BigInt p;
            mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp));
            rhs *= p;
        } else {
            BigInt p;
            mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-exp));
            lhs *= p;
        }
        return lhs < rhs;
    };
    while (scaled_below(e)) --e;
    while (!scaled_below(e + 1)) ++e;

    // q = round(a / den * 10^(sig_digits-1-e)), giving exactly sig_digits digits.
    const long shift = sig_digits - 1 - e;
    BigInt n2 = a, d2 = den;
    if (shift >= 0) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        n2 *= p;
    } else {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
        d2 *= p;
    }
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
    if (r * 2 >= d2) q += 1;
    return {to_decimal(q), e};
}

std::string format_scientific(const std::string& digits, long e, bool negative) {
    std::string out = negative ? "-" : "";
    out += digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e";
    out += (e < 0) ? "-" : "+";
    const std::string mag = std::to_string(e < 0 ? -e : e);
    out += (mag.size() < 2) ? "0" + mag : mag;
    return out;
}

std::string approx_impl(const BigInt& num, const BigInt& den, int sig_digits) {
    if (sig_digits < 1) throw std::invalid_argument("approx_decimal: need at least one digit");
    if (num == 0) return "0";
    auto [digits, e] = scaled_digits(num, den, sig_digits);
    if (static_cast<int>(digits.size()) > sig_digits) {
        // 999.. rounded up one place
        digits.pop_back();
        ++e;
    }
    const bool negative = num < 0;
    // Plain decimal for moderate exponents, scientific elsewhere.
    if (e >= 0 && e < sig_digits + 3) {
        std::string out = negative ? "-" : "";
        if (e + 1 >= static_cast<long>(digits.size())) {
            out += digits + std::string(e + 1 - digits.size(), '0');
        } else {
            out += digits.substr(0, e + 1) + "." + digits.substr(e + 1);
        }
        return out;
    }
    if (e < 0 && e >= -4) {
        std::string out = negative ? "-0." : "0.";
        out += std::string(-e - 1, '0') + digits;
        // trim trailing zeros? keep full precision width for stable output
        return out;
    }
    return format_scientific(digits, e, negative);
}

}  // namespace

std::string approx_decimal(const BigInt& v, int sig_digits) {
    return approx_impl(v, BigInt(1), sig_digits);
}

std::string approx_decimal(const BigRat& v, int sig_digits) {
    return approx_impl(v.get_num(), v.get_den(), sig_digits);
}

std::pair<long, long> round_to_two_significant(const BigInt& v) {
    if (v <= 0) throw std::invalid_argument("round_to_two_significant: value must be positive");
    auto [digits, e] = scaled_digits(v, BigInt(1), 2);
    if (digits.size() > 2) {
        digits.pop_back();
        ++e;
    }
    return {std::stol(digits), e - 1};
}

}  // namespace widthone
