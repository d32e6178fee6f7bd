#pragma once
// packing.hpp - digit-packed matrix multiplication for non-negative integers.
//
// Rows of A and columns of B are encoded as single big integers made of
// fixed-width radix-beta digit fields. One big-integer product per output
// cell then holds the whole row-by-column correlation; the dot product is
// the middle P-digit field of that product, and the remaining fields are the
// other correlation coefficients. Parameters are chosen so no coefficient
// overflows its field (carry-freedom), which is what makes the extraction
// exact.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "packmat/big_int.hpp"
#include "packmat/dense_matrix.hpp"
#include "packmat/packed_int.hpp"

namespace packmat {

struct PackingParams {
    std::uint64_t radix = 10;          // beta
    std::uint32_t element_width = 1;   // M: radix-beta digits per operand element
    std::uint32_t packing_width = 1;   // P: radix-beta digits per packed field
    std::size_t inner = 1;             // n: shared inner dimension
};

namespace detail {

inline void require_compatible(const DenseMatrix<BigInt>& A, const DenseMatrix<BigInt>& B) {
    if (A.cols() != B.rows())
        throw std::invalid_argument("packed multiply: dimension mismatch");
}

// Element converted into the packing radix; rejects negatives and values
// wider than the declared element width.
inline PackedInt packed_element(const BigInt& v, const Radix& r, std::uint32_t element_width) {
    if (v.is_negative())
        throw std::invalid_argument("packed multiply: negative element");
    PackedInt mag = v.magnitude_in(r);
    if (mag.digit_count() > element_width)
        throw std::invalid_argument("packed multiply: params/operand mismatch");
    return mag;
}

}  // namespace detail

// M = digit-count of max(1, max element); P = digit-count of n*(beta^(2M)-1).
inline PackingParams compute_params(const DenseMatrix<BigInt>& A, const DenseMatrix<BigInt>& B,
                                    std::uint64_t radix) {
    detail::require_compatible(A, B);
    const Radix r(radix);
    const BigInt* max_el = nullptr;
    for (const auto* m : {&A, &B}) {
        for (const BigInt& v : m->data()) {
            if (v.is_negative())
                throw std::invalid_argument("compute_params: negative element");
            if (max_el == nullptr || *max_el < v) max_el = &v;
        }
    }
    PackingParams p;
    p.radix = radix;
    p.inner = A.cols();
    p.element_width = max_el->is_zero()
                          ? 1
                          : static_cast<std::uint32_t>(max_el->magnitude_in(r).digit_count());

    // n * (beta^(2M) - 1), evaluated in arbitrary precision.
    const PackedInt one = PackedInt::from_value(1, r);
    PackedInt bound = checked_sub(one.shifted(2 * p.element_width), one);
    if (p.inner > Radix::kMaxBase)
        throw std::invalid_argument("compute_params: inner dimension too large");
    bound = PackedInt::from_limbs(
        r, detail::mul_small({bound.limbs().begin(), bound.limbs().end()},
                             static_cast<std::uint64_t>(p.inner), r.limb_radix()));
    p.packing_width = static_cast<std::uint32_t>(bound.digit_count());
    return p;
}

// C[i] = sum_k A[i][k] * beta^((n-1-k)P): row fields most-significant-first.
inline std::vector<PackedInt> pack_rows(const DenseMatrix<BigInt>& A, const PackingParams& p) {
    if (A.cols() != p.inner)
        throw std::invalid_argument("pack_rows: params/operand mismatch");
    const Radix r(p.radix);
    std::vector<PackedInt> out;
    out.reserve(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        PackedInt c(r);
        for (std::size_t j = 0; j < A.cols(); ++j)
            c = c.shifted(p.packing_width) + detail::packed_element(A(i, j), r, p.element_width);
        out.push_back(std::move(c));
    }
    return out;
}

// D[j] = sum_k B[k][j] * beta^(kP): column fields least-significant-first.
inline std::vector<PackedInt> pack_cols(const DenseMatrix<BigInt>& B, const PackingParams& p) {
    if (B.rows() != p.inner)
        throw std::invalid_argument("pack_cols: params/operand mismatch");
    const Radix r(p.radix);
    std::vector<PackedInt> out;
    out.reserve(B.cols());
    for (std::size_t j = 0; j < B.cols(); ++j) {
        PackedInt d(r);
        for (std::size_t i = 0; i < B.rows(); ++i)
            d = d.shifted(p.packing_width) +
                detail::packed_element(B(B.rows() - 1 - i, j), r, p.element_width);
        out.push_back(std::move(d));
    }
    return out;
}

// Correlation coefficient s of the packed product, s in [0, 2n-2]:
// sum of A[i][k1]*B[k2][j] over k1 - k2 = n-1-s. Slice n-1 is the dot product.
inline BigInt correlation_slice(const PackedInt& product, std::size_t s, const PackingParams& p) {
    if (s > 2 * p.inner - 2)
        throw std::out_of_range("correlation_slice: slice index out of range");
    return BigInt::from_magnitude(1, product.slice(s * p.packing_width, p.packing_width));
}

// Dot product of a packed row and packed column.
inline BigInt packed_dot(const PackedInt& c, const PackedInt& d, const PackingParams& p) {
    const PackedInt product = c * d;
    return BigInt::from_magnitude(
        1, product.slice((p.inner - 1) * p.packing_width, p.packing_width));
}

// Exact product of non-negative integer matrices via one big-integer
// multiplication per output cell.
inline DenseMatrix<BigInt> multiply_nonneg(const DenseMatrix<BigInt>& A,
                                           const DenseMatrix<BigInt>& B, std::uint64_t radix) {
    const PackingParams p = compute_params(A, B, radix);
    const std::vector<PackedInt> packed_rows_of_a = pack_rows(A, p);
    const std::vector<PackedInt> packed_cols_of_b = pack_cols(B, p);
    DenseMatrix<BigInt> out(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j)
            out(i, j) = packed_dot(packed_rows_of_a[i], packed_cols_of_b[j], p);
    return out;
}

// Digit-level memory accounting.
//
// paper_model charges every C/D entry n*P digits and every output cell the
// full transient product width 2nP. impl_model counts the digits actually
// retained: the packed C and D values plus the extracted P-digit results.
struct DigitFootprint {
    std::uint64_t paper_model = 0;
    std::uint64_t impl_model = 0;
};

inline DigitFootprint footprint_digits(const DenseMatrix<BigInt>& A, const DenseMatrix<BigInt>& B,
                                       const PackingParams& p,
                                       const DenseMatrix<BigInt>& product) {
    const Radix r(p.radix);
    DigitFootprint f;
    const std::uint64_t np =
        static_cast<std::uint64_t>(p.inner) * p.packing_width;
    f.paper_model = (A.rows() + B.cols()) * np +
                    static_cast<std::uint64_t>(A.rows()) * B.cols() * 2 * np;
    for (const PackedInt& c : pack_rows(A, p)) f.impl_model += c.digit_count();
    for (const PackedInt& d : pack_cols(B, p)) f.impl_model += d.digit_count();
    for (const BigInt& e : product.data()) f.impl_model += e.magnitude_in(r).digit_count();
    return f;
}

inline DigitFootprint footprint_digits(const DenseMatrix<BigInt>& A, const DenseMatrix<BigInt>& B,
                                       const PackingParams& p) {
    const std::vector<PackedInt> packed_rows_of_a = pack_rows(A, p);
    const std::vector<PackedInt> packed_cols_of_b = pack_cols(B, p);
    const Radix r(p.radix);
    DigitFootprint f;
    const std::uint64_t np =
        static_cast<std::uint64_t>(p.inner) * p.packing_width;
    f.paper_model = (A.rows() + B.cols()) * np +
                    static_cast<std::uint64_t>(A.rows()) * B.cols() * 2 * np;
    for (const PackedInt& c : packed_rows_of_a) f.impl_model += c.digit_count();
    for (const PackedInt& d : packed_cols_of_b) f.impl_model += d.digit_count();
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j)
            f.impl_model +=
                packed_dot(packed_rows_of_a[i], packed_cols_of_b[j], p).magnitude_in(r).digit_count();
    return f;
}

}  // namespace packmat
