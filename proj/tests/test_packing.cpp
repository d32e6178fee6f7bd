#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "packmat/packing.hpp"
#include "packmat/reference.hpp"
#include "support.hpp"

using packmat::BigInt;
using packmat::compute_params;
using packmat::correlation_slice;
using packmat::DenseMatrix;
using packmat::DigitFootprint;
using packmat::footprint_digits;
using packmat::multiply_nonneg;
using packmat::pack_cols;
using packmat::pack_rows;
using packmat::packed_dot;
using packmat::PackedInt;
using packmat::PackingParams;
using packmat::Radix;
using testsupport::example_a;
using testsupport::example_b;
using testsupport::example_product;

namespace {

constexpr std::uint64_t kWordRadix = std::uint64_t{1} << 32;

// Convolution coefficient s computed directly from the operands:
// sum of A[i][k1]*B[k2][j] over k1 - k2 = n-1-s.
BigInt direct_coefficient(const DenseMatrix<BigInt>& A, const DenseMatrix<BigInt>& B,
                          std::size_t i, std::size_t j, std::size_t s) {
    const std::size_t n = A.cols();
    BigInt acc;
    for (std::size_t k1 = 0; k1 < n; ++k1) {
        for (std::size_t k2 = 0; k2 < n; ++k2) {
            if (k1 + s == k2 + n - 1) acc += A(i, k1) * B(k2, j);
        }
    }
    return acc;
}

BigInt pow_bigint(const BigInt& base, std::size_t e) {
    BigInt out(1);
    for (std::size_t i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

TEST_CASE("parameter selection") {
    SECTION("worked 3x3 instance") {
        const PackingParams p = compute_params(example_a(), example_b(), 10);
        CHECK(p.element_width == 1);
        CHECK(p.packing_width == 3);
        CHECK(p.inner == 3);
    }
    SECTION("all-zero 1x1 matrices") {
        const DenseMatrix<BigInt> z(1, 1);
        const PackingParams p = compute_params(z, z, 10);
        CHECK(p.element_width == 1);   // width of max(1, 0)
        CHECK(p.packing_width == 2);   // digits of 1*(10^2-1) = 99
    }
    SECTION("max element a power of the radix needs the wider field") {
        DenseMatrix<BigInt> m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = BigInt(10);
        const PackingParams p = compute_params(m, m, 10);
        CHECK(p.element_width == 2);   // 10 has two digits
        CHECK(p.packing_width == 5);   // digits of 3*(10^4-1) = 29997

        // brute-force carry-freedom at the worst case: every coefficient of
        // the all-tens convolution must fit in P digits
        const BigInt limit = pow_bigint(BigInt(10), p.packing_width);
        for (std::size_t s = 0; s <= 4; ++s)
            CHECK(direct_coefficient(m, m, 0, 0, s) < limit);
    }
    SECTION("errors") {
        const DenseMatrix<BigInt> a(2, 3), b(2, 2);
        CHECK_THROWS_AS(compute_params(a, b, 10), std::invalid_argument);
        DenseMatrix<BigInt> neg(2, 2);
        neg(1, 0) = BigInt(-1);
        CHECK_THROWS_AS(compute_params(neg, neg, 10), std::invalid_argument);
    }
}

TEST_CASE("row and column packing") {
    const PackingParams p = compute_params(example_a(), example_b(), 10);

    SECTION("worked instance") {
        const std::vector<PackedInt> c = pack_rows(example_a(), p);
        REQUIRE(c.size() == 3);
        CHECK(c[0].to_decimal_string() == "1002003");
        CHECK(c[1].to_decimal_string() == "4005006");
        CHECK(c[2].to_decimal_string() == "7008009");

        const std::vector<PackedInt> d = pack_cols(example_b(), p);
        REQUIRE(d.size() == 3);
        CHECK(d[0].to_decimal_string() == "3006009");
        CHECK(d[1].to_decimal_string() == "2005008");
        CHECK(d[2].to_decimal_string() == "1004007");
    }
    SECTION("zero rows and columns pack to zero") {
        const DenseMatrix<BigInt> z(3, 3);
        const PackingParams pz = compute_params(z, z, 10);
        for (const PackedInt& c : pack_rows(z, pz)) CHECK(c.is_zero());
        for (const PackedInt& d : pack_cols(z, pz)) CHECK(d.is_zero());
    }
    SECTION("single-element packing is the element") {
        const DenseMatrix<BigInt> m(1, 1, {7});
        PackingParams p1 = compute_params(m, m, 10);
        CHECK(p1.packing_width == 2);
        CHECK(pack_rows(m, p1)[0].to_decimal_string() == "7");
        CHECK(pack_cols(m, p1)[0].to_decimal_string() == "7");
    }
    SECTION("column packing relates to reversed-row packing") {
        std::mt19937_64 rng(42);
        for (int rep = 0; rep < 20; ++rep) {
            const std::size_t n = 1 + testsupport::rand_below(rng, 12);
            const DenseMatrix<BigInt> A = testsupport::random_nonneg_matrix(rng, n, n, 1000);
            const PackingParams pr = compute_params(A, A, 10);
            DenseMatrix<BigInt> reversed(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) reversed(i, j) = A(i, n - 1 - j);
            const std::vector<PackedInt> via_cols = pack_cols(A.transpose(), pr);
            const std::vector<PackedInt> via_rows = pack_rows(reversed, pr);
            for (std::size_t i = 0; i < n; ++i) CHECK(via_cols[i] == via_rows[i]);
        }
    }
    SECTION("operand mismatch") {
        PackingParams p2 = p;
        p2.inner = 4;
        CHECK_THROWS_AS(pack_rows(example_a(), p2), std::invalid_argument);
        CHECK_THROWS_AS(pack_cols(example_b(), p2), std::invalid_argument);
        PackingParams narrow = p;
        narrow.element_width = 0;
        CHECK_THROWS_AS(pack_rows(example_a(), narrow), std::invalid_argument);
    }
}

TEST_CASE("packed dot product") {
    const PackingParams p = compute_params(example_a(), example_b(), 10);
    const std::vector<PackedInt> c = pack_rows(example_a(), p);
    const std::vector<PackedInt> d = pack_cols(example_b(), p);

    SECTION("worked instance") {
        CHECK((c[0] * d[0]).to_decimal_string() == "3012030036027");
        CHECK(packed_dot(c[0], d[0], p) == BigInt(30));
    }
    SECTION("zero operands") {
        const PackedInt zero(Radix(10));
        CHECK(packed_dot(zero, d[0], p).is_zero());
        CHECK(packed_dot(c[0], zero, p).is_zero());
    }
    SECTION("random rows and columns against the direct dot product") {
        std::mt19937_64 rng(123);
        int checked = 0;
        while (checked < 1000) {
            const std::size_t n = 1 + testsupport::rand_below(rng, 32);
            const DenseMatrix<BigInt> A = testsupport::random_nonneg_matrix(rng, 1, n, 1000000);
            const DenseMatrix<BigInt> B = testsupport::random_nonneg_matrix(rng, n, 1, 1000000);
            const PackingParams pr = compute_params(A, B, checked % 2 == 0 ? 10 : kWordRadix);
            BigInt direct;
            for (std::size_t k = 0; k < n; ++k) direct += A(0, k) * B(k, 0);
            CHECK(packed_dot(pack_rows(A, pr)[0], pack_cols(B, pr)[0], pr) == direct);
            ++checked;
        }
    }
}

TEST_CASE("correlation slices") {
    const PackingParams p = compute_params(example_a(), example_b(), 10);
    const PackedInt prod =
        pack_rows(example_a(), p)[0] * pack_cols(example_b(), p)[0];

    SECTION("worked instance digit groups") {
        CHECK(correlation_slice(prod, 1, p) == BigInt(36));  // 2*9 + 3*6
        const std::vector<std::int64_t> sweep{27, 36, 30, 12, 3};
        for (std::size_t s = 0; s < sweep.size(); ++s)
            CHECK(correlation_slice(prod, s, p) == BigInt(sweep[s]));
    }
    SECTION("top slice is the single corner term") {
        CHECK(correlation_slice(prod, 4, p) == example_a()(0, 0) * example_b()(2, 0));
    }
    SECTION("slice index range") {
        CHECK_THROWS_AS(correlation_slice(prod, 5, p), std::out_of_range);
    }
    SECTION("every slice equals the direct convolution coefficient") {
        std::mt19937_64 rng(321);
        for (int rep = 0; rep < 40; ++rep) {
            const std::size_t n = 1 + testsupport::rand_below(rng, 10);
            const DenseMatrix<BigInt> A = testsupport::random_nonneg_matrix(rng, n, n, 100000);
            const DenseMatrix<BigInt> B = testsupport::random_nonneg_matrix(rng, n, n, 100000);
            const std::uint64_t radix = rep % 2 == 0 ? 10 : kWordRadix;
            const PackingParams pr = compute_params(A, B, radix);
            const std::vector<PackedInt> c = pack_rows(A, pr);
            const std::vector<PackedInt> d = pack_cols(B, pr);
            const std::size_t i = testsupport::rand_below(rng, n);
            const std::size_t j = testsupport::rand_below(rng, n);
            const PackedInt product = c[i] * d[j];
            for (std::size_t s = 0; s <= 2 * n - 2; ++s)
                CHECK(correlation_slice(product, s, pr) == direct_coefficient(A, B, i, j, s));
        }
    }
    SECTION("slices reassemble the whole product") {
        std::mt19937_64 rng(9);
        for (int rep = 0; rep < 25; ++rep) {
            const std::size_t n = 1 + testsupport::rand_below(rng, 10);
            const DenseMatrix<BigInt> A = testsupport::random_nonneg_matrix(rng, n, n, 100000);
            const DenseMatrix<BigInt> B = testsupport::random_nonneg_matrix(rng, n, n, 100000);
            const PackingParams pr = compute_params(A, B, 10);
            const PackedInt product = pack_rows(A, pr)[0] * pack_cols(B, pr)[0];
            PackedInt reassembled(Radix(10));
            for (std::size_t s = 0; s <= 2 * n - 2; ++s)
                reassembled =
                    reassembled +
                    product.slice(s * pr.packing_width, pr.packing_width).shifted(s * pr.packing_width);
            CHECK(reassembled == product);
        }
    }
}

TEST_CASE("packed multiply") {
    SECTION("worked instance") {
        CHECK(multiply_nonneg(example_a(), example_b(), 10) == example_product());
        CHECK(multiply_nonneg(example_a(), example_b(), kWordRadix) == example_product());
    }
    SECTION("identity") {
        const DenseMatrix<BigInt> I = DenseMatrix<BigInt>::identity(5);
        std::mt19937_64 rng(55);
        const DenseMatrix<BigInt> A = testsupport::random_nonneg_matrix(rng, 5, 5, 10000);
        CHECK(multiply_nonneg(A, I, 10) == A);
        CHECK(multiply_nonneg(I, A, 10) == A);
    }
    SECTION("random square instances match the schoolbook oracle") {
        std::mt19937_64 rng(666);
        for (const std::uint64_t radix : {std::uint64_t{10}, kWordRadix}) {
            for (int rep = 0; rep < 6; ++rep) {
                const DenseMatrix<BigInt> A = testsupport::random_nonneg_matrix(rng, 16, 16, 10000);
                const DenseMatrix<BigInt> B = testsupport::random_nonneg_matrix(rng, 16, 16, 10000);
                CHECK(multiply_nonneg(A, B, radix) == packmat::schoolbook_multiply(A, B));
            }
        }
    }
    SECTION("rectangular instances") {
        std::mt19937_64 rng(777);
        for (int rep = 0; rep < 10; ++rep) {
            const std::size_t r = 1 + testsupport::rand_below(rng, 9);
            const std::size_t k = 1 + testsupport::rand_below(rng, 9);
            const std::size_t c = 1 + testsupport::rand_below(rng, 9);
            const DenseMatrix<BigInt> A = testsupport::random_nonneg_matrix(rng, r, k, 100000);
            const DenseMatrix<BigInt> B = testsupport::random_nonneg_matrix(rng, k, c, 100000);
            CHECK(multiply_nonneg(A, B, 10) == packmat::schoolbook_multiply(A, B));
        }
    }
    SECTION("packing stays injective: slicing the packed row recovers it") {
        std::mt19937_64 rng(888);
        for (int rep = 0; rep < 20; ++rep) {
            const std::size_t n = 1 + testsupport::rand_below(rng, 10);
            const DenseMatrix<BigInt> A = testsupport::random_nonneg_matrix(rng, n, n, 1000000);
            const PackingParams p = compute_params(A, A, 10);
            const std::vector<PackedInt> c = pack_rows(A, p);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t k = 0; k < n; ++k) {
                    const PackedInt field =
                        c[i].slice((n - 1 - k) * p.packing_width, p.packing_width);
                    CHECK(BigInt::from_magnitude(1, field) == A(i, k));
                }
            }
        }
    }
    SECTION("wider packing widths stay correct") {
        std::mt19937_64 rng(9999);
        for (int rep = 0; rep < 10; ++rep) {
            const std::size_t n = 2 + testsupport::rand_below(rng, 8);
            const DenseMatrix<BigInt> A = testsupport::random_nonneg_matrix(rng, n, n, 1000);
            const DenseMatrix<BigInt> B = testsupport::random_nonneg_matrix(rng, n, n, 1000);
            PackingParams p = compute_params(A, B, 10);
            p.packing_width += 1 + static_cast<std::uint32_t>(testsupport::rand_below(rng, 4));
            const std::vector<PackedInt> c = pack_rows(A, p);
            const std::vector<PackedInt> d = pack_cols(B, p);
            const DenseMatrix<BigInt> want = packmat::schoolbook_multiply(A, B);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    CHECK(packed_dot(c[i], d[j], p) == want(i, j));
        }
    }
    SECTION("dimension mismatch") {
        const DenseMatrix<BigInt> a(2, 3), b(2, 2);
        CHECK_THROWS_AS(multiply_nonneg(a, b, 10), std::invalid_argument);
    }
}

TEST_CASE("digit footprint") {
    SECTION("worked instance paper model") {
        const PackingParams p = compute_params(example_a(), example_b(), 10);
        const DigitFootprint f = footprint_digits(example_a(), example_b(), p);
        // C and D cost 2*n^2*P = 54 digits; E costs 2*n^3*P on top
        CHECK(f.paper_model == 54 + 2 * 27 * 3);
        CHECK(f.paper_model == 2 * 9 * 3 + 2 * 27 * 3);
    }
    SECTION("all-zero instance retains no digits") {
        const DenseMatrix<BigInt> z(1, 1);
        const PackingParams p = compute_params(z, z, 10);
        CHECK(footprint_digits(z, z, p).impl_model == 0);
    }
    SECTION("retained row digits follow the leading element") {
        std::mt19937_64 rng(1212);
        DenseMatrix<BigInt> A = testsupport::random_nonneg_matrix(rng, 8, 8, 1000000);
        DenseMatrix<BigInt> B = testsupport::random_nonneg_matrix(rng, 8, 8, 1000000);
        for (std::size_t i = 0; i < 8; ++i) {
            if (A(i, 0).is_zero()) A(i, 0) = BigInt(1);
        }
        const PackingParams p = compute_params(A, B, 10);
        const std::vector<PackedInt> c = pack_rows(A, p);
        for (std::size_t i = 0; i < 8; ++i) {
            const std::size_t lead = A(i, 0).magnitude_in(Radix(10)).digit_count();
            CHECK(c[i].digit_count() == (p.inner - 1) * p.packing_width + lead);
        }
    }
    SECTION("overloads agree and paper dominates impl") {
        std::mt19937_64 rng(4321);
        for (int rep = 0; rep < 8; ++rep) {
            const std::size_t n = 1 + testsupport::rand_below(rng, 10);
            const DenseMatrix<BigInt> A = testsupport::random_nonneg_matrix(rng, n, n, 100000);
            const DenseMatrix<BigInt> B = testsupport::random_nonneg_matrix(rng, n, n, 100000);
            const PackingParams p = compute_params(A, B, 10);
            const DigitFootprint standalone = footprint_digits(A, B, p);
            const DigitFootprint reused =
                footprint_digits(A, B, p, multiply_nonneg(A, B, 10));
            CHECK(standalone.paper_model == reused.paper_model);
            CHECK(standalone.impl_model == reused.impl_model);
            CHECK(standalone.paper_model >= standalone.impl_model);
        }
    }
}
