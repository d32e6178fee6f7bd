#pragma once
// big_int.hpp - signed arbitrary-precision integers over the PackedInt kernel.
//
// Matrix elements live here. Magnitudes are kept in the native base-2^32
// representation; the packing layer re-encodes them into its own radix on
// demand via magnitude_in().

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "packmat/packed_int.hpp"

namespace packmat {

class BigInt {
public:
    static const Radix& native_radix() {
        static const Radix r(std::uint64_t{1} << 32);
        return r;
    }

    BigInt() : sign_(0), mag_(native_radix()) {}

    BigInt(std::int64_t v) : sign_(v > 0 ? 1 : (v < 0 ? -1 : 0)), mag_(native_radix()) {
        const std::uint64_t m =
            v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
        mag_ = PackedInt::from_value(m, native_radix());
    }

    static BigInt from_magnitude(int sign, PackedInt mag) {
        BigInt out;
        out.mag_ = mag.radix() == native_radix() ? std::move(mag) : mag.to_radix(native_radix());
        out.sign_ = out.mag_.is_zero() ? 0 : (sign < 0 ? -1 : 1);
        return out;
    }

    // Accepts `[+-]?(0|[1-9][0-9]*)`.
    static BigInt from_string(std::string_view s) {
        int sign = 1;
        if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
            if (s.front() == '-') sign = -1;
            s.remove_prefix(1);
        }
        return from_magnitude(sign, PackedInt::from_decimal_string(s, native_radix()));
    }

    std::string to_string() const {
        return sign_ < 0 ? "-" + mag_.to_decimal_string() : mag_.to_decimal_string();
    }

    int signum() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    const PackedInt& magnitude() const { return mag_; }

    PackedInt magnitude_in(const Radix& r) const { return mag_.to_radix(r); }

    std::uint64_t magnitude_u64() const { return mag_.to_u64(); }

    std::size_t decimal_digit_count() const {
        if (is_zero()) return 0;
        if (mag_.limbs().size() == 1) return digit_count_u64(mag_.limbs()[0], 10);
        return mag_.to_radix(Radix(10)).digit_count();
    }

    BigInt operator-() const {
        BigInt out = *this;
        out.sign_ = -out.sign_;
        return out;
    }

    BigInt abs() const {
        BigInt out = *this;
        out.sign_ = out.sign_ == 0 ? 0 : 1;
        return out;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.sign_ == b.sign_) return from_magnitude(a.sign_, a.mag_ + b.mag_);
        const auto cmp = a.mag_ <=> b.mag_;
        if (cmp == std::strong_ordering::equal) return BigInt();
        return cmp == std::strong_ordering::greater
                   ? from_magnitude(a.sign_, checked_sub(a.mag_, b.mag_))
                   : from_magnitude(b.sign_, checked_sub(b.mag_, a.mag_));
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        return from_magnitude(a.sign_ * b.sign_, a.mag_ * b.mag_);
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_)
            return a.sign_ < b.sign_ ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.sign_ >= 0) return a.mag_ <=> b.mag_;
        return b.mag_ <=> a.mag_;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

private:
    int sign_;
    PackedInt mag_;
};

// value * 10^e, exact.
inline BigInt times_pow10(const BigInt& v, std::uint64_t e) {
    if (v.is_zero()) return v;
    PackedInt mag = v.magnitude();
    const std::uint64_t L = BigInt::native_radix().limb_radix();
    detail::limb_vec limbs(mag.limbs().begin(), mag.limbs().end());
    while (e > 0) {
        std::uint64_t chunk = std::min<std::uint64_t>(e, 9);
        std::uint64_t p = 1;
        for (std::uint64_t i = 0; i < chunk; ++i) p *= 10;
        limbs = detail::mul_small(limbs, p, L);
        e -= chunk;
    }
    return BigInt::from_magnitude(v.signum(),
                                  PackedInt::from_limbs(BigInt::native_radix(), std::move(limbs)));
}

}  // namespace packmat
