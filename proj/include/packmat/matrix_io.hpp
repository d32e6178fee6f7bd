#pragma once
// matrix_io.hpp - the matrix file format and the file-based multiply entry.
//
// Format: one header line `kind rows cols` with kind in {int, decimal,
// complex}, followed by rows*cols whitespace-separated elements in row-major
// order. Integer elements are optionally signed decimal integers; decimal
// elements match [+-]?[0-9]+(\.[0-9]+)?; complex elements are written a+bi or
// a-bi with decimal real and imaginary parts and no spaces.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "packmat/big_int.hpp"
#include "packmat/complex_multiply.hpp"
#include "packmat/decimal_multiply.hpp"
#include "packmat/dense_matrix.hpp"
#include "packmat/exact_decimal.hpp"
#include "packmat/signed_multiply.hpp"

namespace packmat {

enum class MatrixKind { integers, decimals, complexes };

inline std::string kind_name(MatrixKind k) {
    switch (k) {
        case MatrixKind::integers: return "int";
        case MatrixKind::decimals: return "decimal";
        case MatrixKind::complexes: return "complex";
    }
    throw std::logic_error("kind_name: bad kind");
}

inline std::optional<MatrixKind> kind_from_name(std::string_view s) {
    if (s == "int") return MatrixKind::integers;
    if (s == "decimal") return MatrixKind::decimals;
    if (s == "complex") return MatrixKind::complexes;
    return std::nullopt;
}

struct MatrixParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MatrixIoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using MatrixData = std::variant<DenseMatrix<BigInt>, DenseMatrix<ExactDecimal>, ComplexMatrix>;

inline MatrixKind kind_of(const MatrixData& m) {
    return static_cast<MatrixKind>(m.index());
}

// a+bi / a-bi with decimal parts.
inline std::pair<ExactDecimal, ExactDecimal> parse_complex_element(std::string_view s) {
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] == '+' || s[i] == '-') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos || s.empty() || s.back() != 'i')
        throw MatrixParseError("malformed complex element '" + std::string(s) + "'");
    const std::string_view im_token = s.substr(split + 1, s.size() - split - 2);
    if (im_token.empty() || im_token.front() == '+' || im_token.front() == '-')
        throw MatrixParseError("malformed complex element '" + std::string(s) + "'");
    const ExactDecimal re = parse_decimal(s.substr(0, split));
    ExactDecimal im = parse_decimal(im_token);
    if (s[split] == '-') im = -im;
    return {re, im};
}

inline std::string format_complex_element(const ExactDecimal& re, const ExactDecimal& im) {
    const bool neg = im.signum() < 0;
    return re.to_string() + (neg ? "-" : "+") + (neg ? (-im).to_string() : im.to_string()) + "i";
}

inline MatrixData read_matrix(std::istream& in) {
    std::string kind_token;
    std::size_t rows = 0, cols = 0;
    if (!(in >> kind_token >> rows >> cols))
        throw MatrixParseError("malformed matrix header");
    const std::optional<MatrixKind> kind = kind_from_name(kind_token);
    if (!kind) throw MatrixParseError("unknown matrix kind '" + kind_token + "'");
    if (rows == 0 || cols == 0) throw MatrixParseError("matrix dimensions must be positive");

    std::vector<std::string> tokens;
    tokens.reserve(rows * cols);
    std::string tok;
    while (tokens.size() < rows * cols && (in >> tok)) tokens.push_back(tok);
    if (tokens.size() != rows * cols)
        throw MatrixParseError("element count does not match header");
    if (in >> tok) throw MatrixParseError("trailing data after matrix elements");

    try {
        switch (*kind) {
            case MatrixKind::integers: {
                DenseMatrix<BigInt> m(rows, cols);
                for (std::size_t i = 0; i < tokens.size(); ++i)
                    m(i / cols, i % cols) = BigInt::from_string(tokens[i]);
                return m;
            }
            case MatrixKind::decimals: {
                DenseMatrix<ExactDecimal> m(rows, cols);
                for (std::size_t i = 0; i < tokens.size(); ++i)
                    m(i / cols, i % cols) = parse_decimal(tokens[i]);
                return m;
            }
            case MatrixKind::complexes: {
                DenseMatrix<ExactDecimal> re(rows, cols), im(rows, cols);
                for (std::size_t i = 0; i < tokens.size(); ++i) {
                    auto [r, c] = parse_complex_element(tokens[i]);
                    re(i / cols, i % cols) = r;
                    im(i / cols, i % cols) = c;
                }
                return ComplexMatrix(std::move(re), std::move(im));
            }
        }
    } catch (const std::invalid_argument& e) {
        throw MatrixParseError(e.what());
    }
    throw MatrixParseError("unreachable");
}

inline MatrixData read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MatrixIoError("cannot open '" + path + "' for reading");
    return read_matrix(in);
}

inline void write_matrix(std::ostream& out, const MatrixData& m) {
    auto header = [&](std::size_t rows, std::size_t cols) {
        out << kind_name(kind_of(m)) << ' ' << rows << ' ' << cols << '\n';
    };
    if (const auto* ints = std::get_if<DenseMatrix<BigInt>>(&m)) {
        header(ints->rows(), ints->cols());
        for (std::size_t i = 0; i < ints->rows(); ++i)
            for (std::size_t j = 0; j < ints->cols(); ++j)
                out << (*ints)(i, j).to_string() << (j + 1 == ints->cols() ? '\n' : ' ');
    } else if (const auto* decs = std::get_if<DenseMatrix<ExactDecimal>>(&m)) {
        header(decs->rows(), decs->cols());
        for (std::size_t i = 0; i < decs->rows(); ++i)
            for (std::size_t j = 0; j < decs->cols(); ++j)
                out << (*decs)(i, j).to_string() << (j + 1 == decs->cols() ? '\n' : ' ');
    } else {
        const auto& cm = std::get<ComplexMatrix>(m);
        header(cm.rows(), cm.cols());
        for (std::size_t i = 0; i < cm.rows(); ++i)
            for (std::size_t j = 0; j < cm.cols(); ++j)
                out << format_complex_element(cm.re(i, j), cm.im(i, j))
                    << (j + 1 == cm.cols() ? '\n' : ' ');
    }
}

inline void write_matrix_file(const std::string& path, const MatrixData& m) {
    std::ofstream out(path);
    if (!out) throw MatrixIoError("cannot open '" + path + "' for writing");
    write_matrix(out, m);
    out.flush();
    if (!out) throw MatrixIoError("write to '" + path + "' failed");
}

// Exit codes for the file-based multiply: 0 success, 2 parse failure,
// 3 dimension mismatch, 4 I/O failure. Diagnostics go to `diag`.
inline int multiply_file(const std::string& path_a, const std::string& path_b, MatrixKind kind,
                         std::uint64_t radix, const std::string& out_path, std::ostream& diag) {
    MatrixData a{DenseMatrix<BigInt>(1, 1)}, b{DenseMatrix<BigInt>(1, 1)};
    try {
        a = read_matrix_file(path_a);
        b = read_matrix_file(path_b);
    } catch (const MatrixIoError& e) {
        diag << "error: " << e.what() << '\n';
        return 4;
    } catch (const MatrixParseError& e) {
        diag << "error: " << e.what() << '\n';
        return 2;
    }
    if (kind_of(a) != kind || kind_of(b) != kind) {
        diag << "error: input kind does not match requested kind '" << kind_name(kind) << "'\n";
        return 2;
    }

    auto dims = [](const MatrixData& m) -> std::pair<std::size_t, std::size_t> {
        if (const auto* v = std::get_if<DenseMatrix<BigInt>>(&m)) return {v->rows(), v->cols()};
        if (const auto* v = std::get_if<DenseMatrix<ExactDecimal>>(&m))
            return {v->rows(), v->cols()};
        const auto& c = std::get<ComplexMatrix>(m);
        return {c.rows(), c.cols()};
    };
    if (dims(a).second != dims(b).first) {
        diag << "error: dimension mismatch: " << dims(a).first << "x" << dims(a).second << " * "
             << dims(b).first << "x" << dims(b).second << '\n';
        return 3;
    }

    MatrixData product{DenseMatrix<BigInt>(1, 1)};
    switch (kind) {
        case MatrixKind::integers:
            product = multiply_int(std::get<DenseMatrix<BigInt>>(a),
                                   std::get<DenseMatrix<BigInt>>(b), radix);
            break;
        case MatrixKind::decimals:
            product = multiply_decimal(std::get<DenseMatrix<ExactDecimal>>(a),
                                       std::get<DenseMatrix<ExactDecimal>>(b), radix);
            break;
        case MatrixKind::complexes:
            product = multiply_complex(std::get<ComplexMatrix>(a), std::get<ComplexMatrix>(b),
                                       radix);
            break;
    }
    try {
        write_matrix_file(out_path, product);
    } catch (const MatrixIoError& e) {
        diag << "error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}

}  // namespace packmat
