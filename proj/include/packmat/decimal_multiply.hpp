#pragma once
// decimal_multiply.hpp - exact decimal matrix product.
//
// Scale both operands up to integer matrices by 10^R1 and 10^R2 (R = the
// largest fraction-digit count in the operand), multiply via the signed
// integer path, and divide the result by 10^(R1+R2) — exactly, by giving
// every output cell that scale and canonicalizing.

#include <cstdint>

#include "packmat/dense_matrix.hpp"
#include "packmat/exact_decimal.hpp"
#include "packmat/signed_multiply.hpp"

namespace packmat {

inline std::uint32_t max_scale(const DenseMatrix<ExactDecimal>& A) {
    std::uint32_t out = 0;
    for (const ExactDecimal& v : A.data()) out = std::max(out, v.scale());
    return out;
}

// The product before canonicalization: every cell is unscaled(i,j) * 10^-scale
// with scale = R1 + R2.
struct ScaledIntProduct {
    DenseMatrix<BigInt> unscaled;
    std::uint32_t scale = 0;
};

inline ScaledIntProduct multiply_decimal_scaled(const DenseMatrix<ExactDecimal>& A,
                                                const DenseMatrix<ExactDecimal>& B,
                                                std::uint64_t radix) {
    if (A.cols() != B.rows())
        throw std::invalid_argument("multiply_decimal: dimension mismatch");
    const std::uint32_t r1 = max_scale(A);
    const std::uint32_t r2 = max_scale(B);
    DenseMatrix<BigInt> ai(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) ai(i, j) = A(i, j).to_scaled_integer(r1);
    DenseMatrix<BigInt> bi(B.rows(), B.cols());
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) bi(i, j) = B(i, j).to_scaled_integer(r2);
    return {multiply_int(ai, bi, radix), r1 + r2};
}

inline DenseMatrix<ExactDecimal> multiply_decimal(const DenseMatrix<ExactDecimal>& A,
                                                  const DenseMatrix<ExactDecimal>& B,
                                                  std::uint64_t radix) {
    const ScaledIntProduct scaled = multiply_decimal_scaled(A, B, radix);
    DenseMatrix<ExactDecimal> out(scaled.unscaled.rows(), scaled.unscaled.cols());
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j)
            out(i, j) = ExactDecimal::from_parts(scaled.unscaled(i, j), scaled.scale);
    return out;
}

}  // namespace packmat
