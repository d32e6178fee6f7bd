#pragma once
// complex_multiply.hpp - complex matrix product from four real products:
// (Ar + i*Ai)(Br + i*Bi) = (Ar*Br - Ai*Bi) + i*(Ar*Bi + Ai*Br).

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "packmat/decimal_multiply.hpp"
#include "packmat/dense_matrix.hpp"
#include "packmat/exact_decimal.hpp"

namespace packmat {

struct ComplexMatrix {
    DenseMatrix<ExactDecimal> re;
    DenseMatrix<ExactDecimal> im;

    ComplexMatrix(DenseMatrix<ExactDecimal> real, DenseMatrix<ExactDecimal> imag)
        : re(std::move(real)), im(std::move(imag)) {
        if (re.rows() != im.rows() || re.cols() != im.cols())
            throw std::invalid_argument("ComplexMatrix: part dimensions differ");
    }

    std::size_t rows() const { return re.rows(); }
    std::size_t cols() const { return re.cols(); }

    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline ComplexMatrix multiply_complex(const ComplexMatrix& A, const ComplexMatrix& B,
                                      std::uint64_t radix) {
    if (A.cols() != B.rows())
        throw std::invalid_argument("multiply_complex: dimension mismatch");
    const DenseMatrix<ExactDecimal> c1 = multiply_decimal(A.re, B.re, radix);
    const DenseMatrix<ExactDecimal> c2 = multiply_decimal(A.re, B.im, radix);
    const DenseMatrix<ExactDecimal> c3 = multiply_decimal(A.im, B.re, radix);
    const DenseMatrix<ExactDecimal> c4 = multiply_decimal(A.im, B.im, radix);
    return {subtract(c1, c4), add(c2, c3)};
}

}  // namespace packmat
