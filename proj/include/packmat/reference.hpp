#pragma once
// reference.hpp - comparison implementations: direct IJK multiplication and
// Strassen's seven-product recursion. The schoolbook routine doubles as the
// correctness oracle everywhere else.

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "packmat/dense_matrix.hpp"

namespace packmat {

inline constexpr std::size_t kDefaultStrassenCutoff = 64;

template <typename S>
DenseMatrix<S> schoolbook_multiply(const DenseMatrix<S>& A, const DenseMatrix<S>& B) {
    if (A.cols() != B.rows())
        throw std::invalid_argument("schoolbook_multiply: dimension mismatch");
    DenseMatrix<S> out(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < B.cols(); ++j) {
            S acc{};
            for (std::size_t k = 0; k < A.cols(); ++k) acc += A(i, k) * B(k, j);
            out(i, j) = acc;
        }
    }
    return out;
}

// Peak concurrently-live digit accounting for the Strassen recursion: named
// blocks (quadrant copies, block sums, recursive products, assembled results)
// are counted while alive. Expression temporaries are not tracked.
struct StrassenStats {
    std::uint64_t live_digits = 0;
    std::uint64_t peak_digits = 0;
};

namespace detail {

template <typename S>
std::uint64_t matrix_digits(const DenseMatrix<S>& m) {
    std::uint64_t total = 0;
    for (const S& v : m.data()) total += v.decimal_digit_count();
    return total;
}

template <typename S>
void account_acquire(StrassenStats* stats, const DenseMatrix<S>& m) {
    if (stats == nullptr) return;
    stats->live_digits += matrix_digits(m);
    stats->peak_digits = std::max(stats->peak_digits, stats->live_digits);
}

template <typename S>
void account_release(StrassenStats* stats, const DenseMatrix<S>& m) {
    if (stats == nullptr) return;
    stats->live_digits -= matrix_digits(m);
}

template <typename S>
DenseMatrix<S> pad_to(const DenseMatrix<S>& m, std::size_t n) {
    DenseMatrix<S> out(n, n);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

template <typename S>
DenseMatrix<S> block_of(const DenseMatrix<S>& m, std::size_t i0, std::size_t j0, std::size_t rows,
                        std::size_t cols) {
    DenseMatrix<S> out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(i0 + i, j0 + j);
    return out;
}

template <typename S>
DenseMatrix<S> strassen_square(const DenseMatrix<S>& A, const DenseMatrix<S>& B,
                               std::size_t cutoff, StrassenStats* stats) {
    const std::size_t n = A.rows();
    if (n <= cutoff) {
        DenseMatrix<S> out = schoolbook_multiply(A, B);
        account_acquire(stats, out);
        return out;
    }
    if (n % 2 != 0) {
        DenseMatrix<S> ap = pad_to(A, n + 1);
        DenseMatrix<S> bp = pad_to(B, n + 1);
        account_acquire(stats, ap);
        account_acquire(stats, bp);
        DenseMatrix<S> padded = strassen_square(ap, bp, cutoff, stats);
        account_release(stats, ap);
        account_release(stats, bp);
        DenseMatrix<S> out = block_of(padded, 0, 0, n, n);
        account_acquire(stats, out);
        account_release(stats, padded);
        return out;
    }

    const std::size_t h = n / 2;
    DenseMatrix<S> a11 = block_of(A, 0, 0, h, h), a12 = block_of(A, 0, h, h, h);
    DenseMatrix<S> a21 = block_of(A, h, 0, h, h), a22 = block_of(A, h, h, h, h);
    DenseMatrix<S> b11 = block_of(B, 0, 0, h, h), b12 = block_of(B, 0, h, h, h);
    DenseMatrix<S> b21 = block_of(B, h, 0, h, h), b22 = block_of(B, h, h, h, h);
    for (const auto* q : {&a11, &a12, &a21, &a22, &b11, &b12, &b21, &b22})
        account_acquire(stats, *q);

    // Block sums are named temporaries and counted while alive; products come
    // back from the recursion already accounted and are released after use.
    auto product = [&](DenseMatrix<S> x, DenseMatrix<S> y) {
        account_acquire(stats, x);
        account_acquire(stats, y);
        DenseMatrix<S> m = strassen_square(x, y, cutoff, stats);
        account_release(stats, x);
        account_release(stats, y);
        return m;
    };
    DenseMatrix<S> m1 = product(add(a11, a22), add(b11, b22));
    DenseMatrix<S> m2 = product(add(a21, a22), b11);
    DenseMatrix<S> m3 = product(a11, subtract(b12, b22));
    DenseMatrix<S> m4 = product(a22, subtract(b21, b11));
    DenseMatrix<S> m5 = product(add(a11, a12), b22);
    DenseMatrix<S> m6 = product(subtract(a21, a11), add(b11, b12));
    DenseMatrix<S> m7 = product(subtract(a12, a22), add(b21, b22));
    for (const auto* q : {&a11, &a12, &a21, &a22, &b11, &b12, &b21, &b22})
        account_release(stats, *q);

    DenseMatrix<S> out(n, n);
    auto place = [&](const DenseMatrix<S>& c, std::size_t i0, std::size_t j0) {
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < h; ++j) out(i0 + i, j0 + j) = c(i, j);
    };
    place(add(subtract(add(m1, m4), m5), m7), 0, 0);
    place(add(m3, m5), 0, h);
    place(add(m2, m4), h, 0);
    place(add(subtract(m1, m2), add(m3, m6)), h, h);
    account_acquire(stats, out);
    for (const auto* m : {&m1, &m2, &m3, &m4, &m5, &m6, &m7}) account_release(stats, *m);
    return out;
}

}  // namespace detail

// Exact product via Strassen recursion. Rectangular inputs are zero-padded to
// the enclosing square; odd sizes are padded to even at each level; blocks of
// size <= cutoff fall back to schoolbook_multiply.
template <typename S>
DenseMatrix<S> strassen_multiply(const DenseMatrix<S>& A, const DenseMatrix<S>& B,
                                 std::size_t cutoff = kDefaultStrassenCutoff,
                                 StrassenStats* stats = nullptr) {
    if (A.cols() != B.rows())
        throw std::invalid_argument("strassen_multiply: dimension mismatch");
    if (cutoff == 0) throw std::invalid_argument("strassen_multiply: cutoff must be positive");
    const std::size_t n = std::max({A.rows(), A.cols(), B.cols()});
    const bool square = A.rows() == n && A.cols() == n && B.cols() == n;
    if (square) {
        DenseMatrix<S> out = detail::strassen_square(A, B, cutoff, stats);
        detail::account_release(stats, out);
        return out;
    }
    DenseMatrix<S> ap = detail::pad_to(A, n);
    DenseMatrix<S> bp = detail::pad_to(B, n);
    detail::account_acquire(stats, ap);
    detail::account_acquire(stats, bp);
    DenseMatrix<S> padded = detail::strassen_square(ap, bp, cutoff, stats);
    detail::account_release(stats, ap);
    detail::account_release(stats, bp);
    DenseMatrix<S> out = detail::block_of(padded, 0, 0, A.rows(), B.cols());
    detail::account_release(stats, padded);
    return out;
}

}  // namespace packmat
