#pragma once
// exact_decimal.hpp - exact scaled-decimal numbers: sign * unscaled * 10^-scale.
//
// No rounding anywhere. Canonical form keeps the scale minimal (the unscaled
// value is not divisible by 10 while the scale is positive), so equality is
// structural.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "packmat/big_int.hpp"
#include "packmat/packed_int.hpp"

namespace packmat {

class ExactDecimal {
public:
    ExactDecimal() : value_(), scale_(0) {}
    ExactDecimal(std::int64_t v) : value_(v), scale_(0) {}

    // value = unscaled_signed * 10^-scale, canonicalized.
    static ExactDecimal from_parts(BigInt unscaled_signed, std::uint32_t scale) {
        ExactDecimal out;
        out.value_ = std::move(unscaled_signed);
        out.scale_ = scale;
        out.canonicalize();
        return out;
    }

    int signum() const { return value_.signum(); }
    bool is_zero() const { return value_.is_zero(); }
    std::uint32_t scale() const { return scale_; }
    const BigInt& unscaled_signed() const { return value_; }
    const PackedInt& unscaled() const { return value_.magnitude(); }
    bool is_integer() const { return scale_ == 0; }

    // The signed integer value * 10^(target_scale - scale); target must be >= scale.
    BigInt to_scaled_integer(std::uint32_t target_scale) const {
        if (target_scale < scale_)
            throw std::invalid_argument("ExactDecimal: target scale below own scale");
        return times_pow10(value_, target_scale - scale_);
    }

    std::size_t decimal_digit_count() const { return value_.decimal_digit_count(); }

    std::string to_string() const {
        std::string digits = value_.magnitude().to_decimal_string();
        std::string out = value_.is_negative() ? "-" : "";
        if (scale_ == 0) return out + digits;
        if (digits.size() <= scale_) digits.insert(0, scale_ + 1 - digits.size(), '0');
        digits.insert(digits.size() - scale_, ".");
        return out + digits;
    }

    ExactDecimal operator-() const {
        ExactDecimal out = *this;
        out.value_ = -out.value_;
        return out;
    }

    friend ExactDecimal operator+(const ExactDecimal& a, const ExactDecimal& b) {
        const std::uint32_t s = std::max(a.scale_, b.scale_);
        return from_parts(a.to_scaled_integer(s) + b.to_scaled_integer(s), s);
    }

    friend ExactDecimal operator-(const ExactDecimal& a, const ExactDecimal& b) {
        return a + (-b);
    }

    friend ExactDecimal operator*(const ExactDecimal& a, const ExactDecimal& b) {
        return from_parts(a.value_ * b.value_, a.scale_ + b.scale_);
    }

    ExactDecimal& operator+=(const ExactDecimal& o) { return *this = *this + o; }
    ExactDecimal& operator-=(const ExactDecimal& o) { return *this = *this - o; }
    ExactDecimal& operator*=(const ExactDecimal& o) { return *this = *this * o; }

    friend std::strong_ordering operator<=>(const ExactDecimal& a, const ExactDecimal& b) {
        const std::uint32_t s = std::max(a.scale_, b.scale_);
        return a.to_scaled_integer(s) <=> b.to_scaled_integer(s);
    }

    // Canonical form makes value equality structural.
    friend bool operator==(const ExactDecimal& a, const ExactDecimal& b) {
        return a.scale_ == b.scale_ && a.value_ == b.value_;
    }

private:
    void canonicalize() {
        if (value_.is_zero()) {
            scale_ = 0;
            return;
        }
        const std::uint64_t L = BigInt::native_radix().limb_radix();
        detail::limb_vec limbs(value_.magnitude().limbs().begin(),
                               value_.magnitude().limbs().end());
        while (scale_ > 0) {
            auto [q, rem] = detail::divmod_small(limbs, 10, L);
            if (rem != 0) break;
            limbs = std::move(q);
            --scale_;
        }
        value_ = BigInt::from_magnitude(
            value_.signum(), PackedInt::from_limbs(BigInt::native_radix(), std::move(limbs)));
    }

    BigInt value_;
    std::uint32_t scale_;
};

// Accepts `[+-]?[0-9]+(\.[0-9]+)?`.
inline ExactDecimal parse_decimal(std::string_view s) {
    const std::string_view original = s;
    int sign = 1;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        if (s.front() == '-') sign = -1;
        s.remove_prefix(1);
    }
    const std::size_t dot = s.find('.');
    std::string_view int_part = dot == std::string_view::npos ? s : s.substr(0, dot);
    std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    auto all_digits = [](std::string_view v) {
        return v.find_first_not_of("0123456789") == std::string_view::npos;
    };
    if (int_part.empty() || !all_digits(int_part) || !all_digits(frac_part) ||
        (dot != std::string_view::npos && frac_part.empty()))
        throw std::invalid_argument("parse_decimal: malformed input '" + std::string(original) +
                                    "'");
    std::string digits;
    digits.reserve(int_part.size() + frac_part.size());
    digits += int_part;
    digits += frac_part;
    const std::size_t nonzero = digits.find_first_not_of('0');
    digits = nonzero == std::string::npos ? "0" : digits.substr(nonzero);
    return ExactDecimal::from_parts(
        BigInt::from_magnitude(sign,
                               PackedInt::from_decimal_string(digits, BigInt::native_radix())),
        static_cast<std::uint32_t>(frac_part.size()));
}

}  // namespace packmat
