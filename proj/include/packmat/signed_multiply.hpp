#pragma once
// signed_multiply.hpp - general integer matrix product via a sign split.
//
// A signed matrix splits as A = A1 - A2 with both parts non-negative and at
// most one part nonzero per cell. A*B then reduces to four non-negative
// packed products: A1*B1 - A1*B2 - A2*B1 + A2*B2. Each sub-product derives
// its own packing parameters.

#include <cstdint>
#include <utility>

#include "packmat/big_int.hpp"
#include "packmat/dense_matrix.hpp"
#include "packmat/packing.hpp"

namespace packmat {

struct SignSplit {
    DenseMatrix<BigInt> positive_part;
    DenseMatrix<BigInt> negative_part;
};

inline SignSplit split_signs(const DenseMatrix<BigInt>& A) {
    SignSplit out{DenseMatrix<BigInt>(A.rows(), A.cols()), DenseMatrix<BigInt>(A.rows(), A.cols())};
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
            const BigInt& v = A(i, j);
            if (v.is_negative())
                out.negative_part(i, j) = -v;
            else
                out.positive_part(i, j) = v;
        }
    }
    return out;
}

// The four partial products, retained for inspection.
struct SignedProductTrace {
    SignSplit a_split;
    SignSplit b_split;
    DenseMatrix<BigInt> c1;  // A1*B1
    DenseMatrix<BigInt> c2;  // A1*B2
    DenseMatrix<BigInt> c3;  // A2*B1
    DenseMatrix<BigInt> c4;  // A2*B2
    DenseMatrix<BigInt> result;
};

inline SignedProductTrace multiply_int_traced(const DenseMatrix<BigInt>& A,
                                              const DenseMatrix<BigInt>& B, std::uint64_t radix) {
    if (A.cols() != B.rows())
        throw std::invalid_argument("multiply_int: dimension mismatch");
    SignSplit sa = split_signs(A);
    SignSplit sb = split_signs(B);
    DenseMatrix<BigInt> c1 = multiply_nonneg(sa.positive_part, sb.positive_part, radix);
    DenseMatrix<BigInt> c2 = multiply_nonneg(sa.positive_part, sb.negative_part, radix);
    DenseMatrix<BigInt> c3 = multiply_nonneg(sa.negative_part, sb.positive_part, radix);
    DenseMatrix<BigInt> c4 = multiply_nonneg(sa.negative_part, sb.negative_part, radix);
    DenseMatrix<BigInt> result = add(subtract(subtract(c1, c2), c3), c4);
    return {std::move(sa), std::move(sb), std::move(c1), std::move(c2),
            std::move(c3), std::move(c4), std::move(result)};
}

inline DenseMatrix<BigInt> multiply_int(const DenseMatrix<BigInt>& A, const DenseMatrix<BigInt>& B,
                                        std::uint64_t radix) {
    return multiply_int_traced(A, B, radix).result;
}

}  // namespace packmat
