#pragma once
// dense_matrix.hpp - row-major dense matrix over an arbitrary scalar.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace packmat {

template <typename S>
class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("DenseMatrix: dimensions must be positive");
    }

    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<S> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("DenseMatrix: dimensions must be positive");
        if (data_.size() != rows * cols)
            throw std::invalid_argument("DenseMatrix: data length mismatch");
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix out(n, n);
        for (std::size_t i = 0; i < n; ++i) out(i, i) = S(1);
        return out;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    S& at(std::size_t i, std::size_t j) {
        check_index(i, j);
        return data_[i * cols_ + j];
    }
    const S& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return data_[i * cols_ + j];
    }

    const std::vector<S>& data() const { return data_; }

    DenseMatrix transpose() const {
        DenseMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("DenseMatrix: index out of range");
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<S> data_;
};

template <typename S>
DenseMatrix<S> add(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix add: dimension mismatch");
    DenseMatrix<S> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

template <typename S>
DenseMatrix<S> subtract(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix subtract: dimension mismatch");
    DenseMatrix<S> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

}  // namespace packmat
