#pragma once
// packed_int.hpp - radix-beta arbitrary-precision non-negative integers with
// cheap digit slicing.
//
// A PackedInt is a canonical digit sequence in a configurable radix beta
// (2 <= beta <= 2^32). Storage packs as many radix-beta digits into each
// 32-bit limb as fit below 2^32, so the decimal mode (base 10, nine digits
// per limb) and the power-of-two mode (base 2^32, one digit per limb) share
// one code path. Slicing (floor-divide by beta^k, then mod beta^k) costs one
// linear pass over the limbs and never performs general division; when beta
// equals the limb radix it degenerates to a limb-range copy.

#include <algorithm>
#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace packmat {

// Digits of v in the given base; zero has zero digits.
inline std::uint32_t digit_count_u64(std::uint64_t v, std::uint64_t base) {
    std::uint32_t n = 0;
    while (v != 0) {
        v /= base;
        ++n;
    }
    return n;
}

// ceil(log_base(q)) for q >= 1.
inline std::uint32_t ceil_log_u64(std::uint64_t q, std::uint64_t base) {
    if (q <= 1) return 0;
    return digit_count_u64(q - 1, base);
}

// A digit radix together with its limb packing: limb_radix = base^digits_per_limb
// is the largest power of base not exceeding 2^32.
class Radix {
public:
    static constexpr std::uint64_t kMaxBase = std::uint64_t{1} << 32;

    explicit Radix(std::uint64_t base) : base_(base) {
        if (base < 2 || base > kMaxBase)
            throw std::invalid_argument("Radix: base must be in [2, 2^32]");
        limb_radix_ = base;
        digits_per_limb_ = 1;
        while (limb_radix_ <= kMaxBase / base) {
            limb_radix_ *= base;
            ++digits_per_limb_;
        }
    }

    std::uint64_t base() const { return base_; }
    std::uint64_t limb_radix() const { return limb_radix_; }
    std::uint32_t digits_per_limb() const { return digits_per_limb_; }

    friend bool operator==(const Radix& a, const Radix& b) { return a.base_ == b.base_; }
    friend bool operator!=(const Radix& a, const Radix& b) { return a.base_ != b.base_; }

private:
    std::uint64_t base_;
    std::uint64_t limb_radix_;
    std::uint32_t digits_per_limb_;
};

namespace detail {

using limb_vec = std::vector<std::uint32_t>;

inline void canonicalize(limb_vec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline int compare_limbs(const limb_vec& a, const limb_vec& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

inline limb_vec add_limbs(const limb_vec& a, const limb_vec& b, std::uint64_t L) {
    const limb_vec& lo = a.size() <= b.size() ? a : b;
    const limb_vec& hi = a.size() <= b.size() ? b : a;
    limb_vec out(hi.size());
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        if (cur >= L) {
            cur -= L;
            carry = 1;
        } else {
            carry = 0;
        }
        out[i] = static_cast<std::uint32_t>(cur);
    }
    if (carry) out.push_back(1);
    return out;
}

// Requires value(a) >= value(b).
inline limb_vec sub_limbs(const limb_vec& a, const limb_vec& b, std::uint64_t L) {
    assert(compare_limbs(a, b) >= 0);
    limb_vec out(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                           (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (cur < 0) {
            cur += static_cast<std::int64_t>(L);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(cur);
    }
    canonicalize(out);
    return out;
}

// v * m + 0, with m <= 2^32.
inline limb_vec mul_small(const limb_vec& v, std::uint64_t m, std::uint64_t L) {
    assert(m <= (std::uint64_t{1} << 32));
    if (v.empty() || m == 0) return {};
    limb_vec out(v.size());
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        // v[i]*m + carry <= (L-1)*m + (m-1) = L*m - 1 <= 2^64 - 1
        std::uint64_t cur = static_cast<std::uint64_t>(v[i]) * m + carry;
        out[i] = static_cast<std::uint32_t>(cur % L);
        carry = cur / L;
    }
    while (carry != 0) {
        out.push_back(static_cast<std::uint32_t>(carry % L));
        carry /= L;
    }
    canonicalize(out);
    return out;
}

inline limb_vec add_u64(const limb_vec& v, std::uint64_t x, std::uint64_t L) {
    limb_vec xs;
    while (x != 0) {
        xs.push_back(static_cast<std::uint32_t>(x % L));
        x /= L;
    }
    return add_limbs(v, xs, L);
}

// Quotient and remainder by a small divisor d in [1, 2^32].
inline std::pair<limb_vec, std::uint64_t> divmod_small(const limb_vec& v, std::uint64_t d,
                                                       std::uint64_t L) {
    assert(d >= 1 && d <= (std::uint64_t{1} << 32));
    limb_vec q(v.size());
    std::uint64_t rem = 0;
    for (std::size_t i = v.size(); i-- > 0;) {
        // rem < d <= 2^32 and v[i] < L <= 2^32, so rem*L + v[i] < 2^64.
        std::uint64_t cur = rem * L + v[i];
        q[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    canonicalize(q);
    return {std::move(q), rem};
}

inline limb_vec mul_schoolbook(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                               std::uint64_t L) {
    if (a.empty() || b.empty()) return {};
    limb_vec z(a.size() + b.size(), 0);
    const bool pow2 = (L & (L - 1)) == 0;
    const int shift = pow2 ? std::countr_zero(L) : 0;
    const std::uint64_t mask = pow2 ? L - 1 : 0;
    unsigned __int128 acc = 0;
    for (std::size_t col = 0; col < z.size(); ++col) {
        const std::size_t i_lo = col >= b.size() ? col - b.size() + 1 : 0;
        const std::size_t i_hi = std::min(col, a.size() - 1);
        for (std::size_t i = i_lo; i <= i_hi; ++i)
            acc += static_cast<std::uint64_t>(a[i]) * b[col - i];
        if (pow2) {
            z[col] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(acc) & mask);
            acc >>= shift;
        } else if (acc <= ~std::uint64_t{0}) {
            std::uint64_t a64 = static_cast<std::uint64_t>(acc);
            z[col] = static_cast<std::uint32_t>(a64 % L);
            acc = a64 / L;
        } else {
            z[col] = static_cast<std::uint32_t>(acc % L);
            acc /= L;
        }
    }
    assert(acc == 0);
    canonicalize(z);
    return z;
}

// Karatsuba above the threshold, schoolbook below. threshold = 0 means
// schoolbook everywhere.
inline limb_vec mul_limbs(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                          std::uint64_t L, std::size_t threshold) {
    if (a.empty() || b.empty()) return {};
    if (threshold == 0 || std::min(a.size(), b.size()) <= threshold)
        return mul_schoolbook(a, b, L);
    const std::size_t half = (std::max(a.size(), b.size()) + 1) / 2;
    auto low = [half](std::span<const std::uint32_t> v) {
        return v.subspan(0, std::min(half, v.size()));
    };
    auto high = [half](std::span<const std::uint32_t> v) {
        return v.size() > half ? v.subspan(half) : std::span<const std::uint32_t>{};
    };
    limb_vec a0(low(a).begin(), low(a).end());
    limb_vec a1(high(a).begin(), high(a).end());
    limb_vec b0(low(b).begin(), low(b).end());
    limb_vec b1(high(b).begin(), high(b).end());
    canonicalize(a0);
    canonicalize(b0);

    limb_vec z0 = mul_limbs(a0, b0, L, threshold);
    limb_vec z2 = mul_limbs(a1, b1, L, threshold);
    limb_vec sa = add_limbs(a0, a1, L);
    limb_vec sb = add_limbs(b0, b1, L);
    limb_vec z1 = mul_limbs(sa, sb, L, threshold);
    z1 = sub_limbs(z1, add_limbs(z0, z2, L), L);

    limb_vec out(a.size() + b.size(), 0);
    auto accumulate = [&](const limb_vec& v, std::size_t at) {
        std::uint64_t carry = 0;
        std::size_t i = 0;
        for (; i < v.size(); ++i) {
            std::uint64_t cur = carry + out[at + i] + v[i];
            if (cur >= L) {
                cur -= L;
                carry = 1;
            } else {
                carry = 0;
            }
            out[at + i] = static_cast<std::uint32_t>(cur);
        }
        for (; carry != 0; ++i) {
            std::uint64_t cur = carry + out[at + i];
            if (cur >= L) {
                cur -= L;
                carry = 1;
            } else {
                carry = 0;
            }
            out[at + i] = static_cast<std::uint32_t>(cur);
        }
    };
    accumulate(z0, 0);
    accumulate(z1, half);
    accumulate(z2, 2 * half);
    canonicalize(out);
    return out;
}

}  // namespace detail

inline constexpr std::size_t kKaratsubaThreshold = 32;

class PackedInt {
public:
    explicit PackedInt(Radix r) : radix_(r) {}

    static PackedInt from_value(std::uint64_t v, Radix r) {
        PackedInt out(r);
        out.limbs_ = detail::add_u64({}, v, r.limb_radix());
        return out;
    }

    // Raw constructor from little-endian limbs in base r.limb_radix().
    static PackedInt from_limbs(Radix r, detail::limb_vec limbs) {
        for (std::uint32_t limb : limbs) {
            if (limb >= r.limb_radix())
                throw std::invalid_argument("PackedInt::from_limbs: limb out of range");
        }
        PackedInt out(r);
        detail::canonicalize(limbs);
        out.limbs_ = std::move(limbs);
        return out;
    }

    // Accepts `0|[1-9][0-9]*`.
    static PackedInt from_decimal_string(std::string_view s, Radix r) {
        if (s.empty() || (s.size() > 1 && s.front() == '0') ||
            s.find_first_not_of("0123456789") != std::string_view::npos)
            throw std::invalid_argument("PackedInt: malformed decimal string");
        PackedInt out(r);
        if (s == "0") return out;
        if (r.base() == 10) {
            const std::uint32_t k = r.digits_per_limb();
            for (std::size_t end = s.size(); end > 0;) {
                const std::size_t begin = end > k ? end - k : 0;
                std::uint32_t limb = 0;
                for (std::size_t i = begin; i < end; ++i)
                    limb = limb * 10 + static_cast<std::uint32_t>(s[i] - '0');
                out.limbs_.push_back(limb);
                end = begin;
            }
            detail::canonicalize(out.limbs_);
            return out;
        }
        const std::uint64_t L = r.limb_radix();
        for (std::size_t pos = 0; pos < s.size();) {
            const std::size_t chunk = std::min<std::size_t>(9, s.size() - pos);
            std::uint64_t val = 0, scale = 1;
            for (std::size_t i = 0; i < chunk; ++i) {
                val = val * 10 + static_cast<std::uint64_t>(s[pos + i] - '0');
                scale *= 10;
            }
            out.limbs_ = detail::mul_small(out.limbs_, scale, L);
            out.limbs_ = detail::add_u64(out.limbs_, val, L);
            pos += chunk;
        }
        return out;
    }

    std::string to_decimal_string() const {
        if (is_zero()) return "0";
        if (radix_.base() == 10) {
            std::string out = std::to_string(limbs_.back());
            const std::uint32_t k = radix_.digits_per_limb();
            for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
                std::string part = std::to_string(limbs_[i]);
                out.append(k - part.size(), '0');
                out += part;
            }
            return out;
        }
        std::string out;
        detail::limb_vec v = limbs_;
        while (!v.empty()) {
            auto [q, rem] = detail::divmod_small(v, 1000000000u, radix_.limb_radix());
            std::string part = std::to_string(rem);
            if (!q.empty()) part.insert(0, 9 - part.size(), '0');
            out.insert(0, part);
            v = std::move(q);
        }
        return out;
    }

    const Radix& radix() const { return radix_; }
    bool is_zero() const { return limbs_.empty(); }
    std::span<const std::uint32_t> limbs() const { return limbs_; }

    bool is_canonical() const {
        if (!limbs_.empty() && limbs_.back() == 0) return false;
        return std::all_of(limbs_.begin(), limbs_.end(),
                           [&](std::uint32_t l) { return l < radix_.limb_radix(); });
    }

    // Number of radix-beta digits; zero has none.
    std::size_t digit_count() const {
        if (is_zero()) return 0;
        return (limbs_.size() - 1) * radix_.digits_per_limb() +
               digit_count_u64(limbs_.back(), radix_.base());
    }

    std::uint64_t digit_at(std::size_t index) const {
        const std::uint32_t k = radix_.digits_per_limb();
        const std::size_t li = index / k;
        if (li >= limbs_.size()) return 0;
        std::uint64_t limb = limbs_[li];
        for (std::size_t r = index % k; r > 0; --r) limb /= radix_.base();
        return limb % radix_.base();
    }

    // floor(value / beta^offset) mod beta^width; out-of-range slices are zero.
    PackedInt slice(std::size_t offset, std::size_t width) const {
        PackedInt out(radix_);
        if (width == 0 || is_zero()) return out;
        const std::uint32_t k = radix_.digits_per_limb();
        const std::size_t limb_off = offset / k;
        if (limb_off >= limbs_.size()) return out;
        detail::limb_vec v(limbs_.begin() + static_cast<std::ptrdiff_t>(limb_off), limbs_.end());
        if (const std::size_t r = offset % k; r != 0)
            v = detail::divmod_small(v, pow_base(r), radix_.limb_radix()).first;
        const std::size_t full = width / k;
        const std::size_t part = width % k;
        if (v.size() > full + (part ? 1 : 0)) v.resize(full + (part ? 1 : 0));
        if (part != 0 && v.size() == full + 1)
            v[full] = static_cast<std::uint32_t>(v[full] % pow_base(part));
        detail::canonicalize(v);
        out.limbs_ = std::move(v);
        return out;
    }

    // value * beta^digits.
    PackedInt shifted(std::size_t digits) const {
        if (is_zero()) return PackedInt(radix_);
        const std::uint32_t k = radix_.digits_per_limb();
        detail::limb_vec v = limbs_;
        if (const std::size_t r = digits % k; r != 0)
            v = detail::mul_small(v, pow_base(r), radix_.limb_radix());
        v.insert(v.begin(), digits / k, 0u);
        PackedInt out(radix_);
        out.limbs_ = std::move(v);
        return out;
    }

    PackedInt to_radix(Radix dst) const {
        if (dst == radix_) return *this;
        PackedInt out(dst);
        const std::uint64_t Ldst = dst.limb_radix();
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            out.limbs_ = detail::mul_small(out.limbs_, radix_.limb_radix(), Ldst);
            out.limbs_ = detail::add_u64(out.limbs_, limbs_[i], Ldst);
        }
        return out;
    }

    std::uint64_t to_u64() const {
        std::uint64_t val = 0;
        const std::uint64_t L = radix_.limb_radix();
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            if (val > (~std::uint64_t{0} - limbs_[i]) / L)
                throw std::overflow_error("PackedInt::to_u64: value too large");
            val = val * L + limbs_[i];
        }
        return val;
    }

    friend PackedInt operator+(const PackedInt& a, const PackedInt& b) {
        a.require_same_radix(b);
        PackedInt out(a.radix_);
        out.limbs_ = detail::add_limbs(a.limbs_, b.limbs_, a.radix_.limb_radix());
        return out;
    }

    friend PackedInt operator*(const PackedInt& a, const PackedInt& b) {
        return multiply(a, b, kKaratsubaThreshold);
    }

    friend PackedInt multiply(const PackedInt& a, const PackedInt& b,
                              std::size_t karatsuba_threshold) {
        a.require_same_radix(b);
        PackedInt out(a.radix_);
        out.limbs_ =
            detail::mul_limbs(a.limbs_, b.limbs_, a.radix_.limb_radix(), karatsuba_threshold);
        return out;
    }

    // Throws if b > a; support for the signed adapters.
    friend PackedInt checked_sub(const PackedInt& a, const PackedInt& b) {
        a.require_same_radix(b);
        if (detail::compare_limbs(a.limbs_, b.limbs_) < 0)
            throw std::invalid_argument("checked_sub: negative result");
        PackedInt out(a.radix_);
        out.limbs_ = detail::sub_limbs(a.limbs_, b.limbs_, a.radix_.limb_radix());
        return out;
    }

    friend std::strong_ordering operator<=>(const PackedInt& a, const PackedInt& b) {
        a.require_same_radix(b);
        const int c = detail::compare_limbs(a.limbs_, b.limbs_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend bool operator==(const PackedInt& a, const PackedInt& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

private:
    void require_same_radix(const PackedInt& other) const {
        if (radix_ != other.radix_) throw std::invalid_argument("PackedInt: radix mismatch");
    }

    std::uint64_t pow_base(std::size_t e) const {
        std::uint64_t p = 1;
        while (e-- > 0) p *= radix_.base();
        return p;
    }

    Radix radix_;
    detail::limb_vec limbs_;
};

// Namespace-scope names for the hidden-friend definitions above.
PackedInt multiply(const PackedInt&, const PackedInt&, std::size_t karatsuba_threshold);
PackedInt checked_sub(const PackedInt&, const PackedInt&);

}  // namespace packmat
