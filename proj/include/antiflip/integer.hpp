#pragma once

// Arbitrary-precision signed integer with an inline 64-bit fast path.
//
// Values that fit in int64_t are stored inline; anything larger is held in an
// owned boost::multiprecision::cpp_int. Every arithmetic result is demoted
// back to the inline form when it fits, so equality and hashing only ever
// compare like with like.

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <utility>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace antiflip {

class Integer {
public:
    using Big = boost::multiprecision::cpp_int;

    Integer() noexcept = default;
    Integer(const Integer& o) : small_(o.small_), big_(o.big_ ? copy_big(*o.big_) : nullptr) {}
    Integer(Integer&& o) noexcept : small_(o.small_), big_(o.big_) { o.big_ = nullptr; }
    Integer& operator=(const Integer& o) {
        if (this != &o) *this = Integer(o);
        return *this;
    }
    Integer& operator=(Integer&& o) noexcept {
        std::swap(small_, o.small_);
        std::swap(big_, o.big_);
        return *this;
    }
    ~Integer() {
        if (big_) free_big(big_);
    }
    template <std::signed_integral T>
    Integer(T v) noexcept : small_(static_cast<std::int64_t>(v)) {}  // NOLINT(implicit)
    template <std::unsigned_integral T>
    Integer(T v) : Integer(Big(v)) {}  // NOLINT(implicit)
    explicit Integer(const Big& v);

    /// Parses an optionally signed decimal literal; throws DomainError on junk.
    static Integer parse(std::string_view text);

    [[nodiscard]] bool is_small() const noexcept { return !big_; }
    [[nodiscard]] std::int64_t small_value() const noexcept { return small_; }
    [[nodiscard]] Big to_big() const { return big_ ? *big_ : Big(small_); }
    [[nodiscard]] std::string str() const;
    [[nodiscard]] std::size_t digits() const;  // decimal digits of |x|
    [[nodiscard]] int sign() const noexcept { return big_ ? big_sign() : (small_ > 0) - (small_ < 0); }

    friend Integer operator+(const Integer& a, const Integer& b) {
        std::int64_t r;
        if (!a.big_ && !b.big_ && !__builtin_add_overflow(a.small_, b.small_, &r)) return Integer(r);
        return slow_add(a, b);
    }
    friend Integer operator-(const Integer& a, const Integer& b) {
        std::int64_t r;
        if (!a.big_ && !b.big_ && !__builtin_sub_overflow(a.small_, b.small_, &r)) return Integer(r);
        return slow_sub(a, b);
    }
    friend Integer operator*(const Integer& a, const Integer& b) {
        std::int64_t r;
        if (!a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &r)) return Integer(r);
        return slow_mul(a, b);
    }
    // Truncating division, as for built-in integers. Division by zero throws.
    friend Integer operator/(const Integer& a, const Integer& b) {
        if (!a.big_ && !b.big_ && b.small_ != 0 && !(b.small_ == -1 && a.small_ == INT64_MIN))
            return Integer(a.small_ / b.small_);
        return slow_div(a, b);
    }
    friend Integer operator%(const Integer& a, const Integer& b) {
        if (!a.big_ && !b.big_ && b.small_ != 0 && b.small_ != -1) return Integer(a.small_ % b.small_);
        return slow_mod(a, b);
    }
    Integer operator-() const { return Integer(0) - *this; }

    Integer& operator+=(const Integer& o) { return *this = *this + o; }
    Integer& operator-=(const Integer& o) { return *this = *this - o; }
    Integer& operator*=(const Integer& o) { return *this = *this * o; }

    friend bool operator==(const Integer& a, const Integer& b) {
        if (!a.big_ && !b.big_) return a.small_ == b.small_;
        if (!a.big_ || !b.big_) return false;  // normalized: big never fits int64
        return *a.big_ == *b.big_;
    }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
        return slow_cmp(a, b);
    }

    friend std::ostream& operator<<(std::ostream& os, const Integer& x);

private:
    std::int64_t small_ = 0;
    Big* big_ = nullptr;  // owned; set only when the value does not fit in int64

    static Big* copy_big(const Big& b);
    static void free_big(Big* b) noexcept;

    static Integer slow_add(const Integer& a, const Integer& b);
    static Integer slow_sub(const Integer& a, const Integer& b);
    static Integer slow_mul(const Integer& a, const Integer& b);
    static Integer slow_div(const Integer& a, const Integer& b);
    static Integer slow_mod(const Integer& a, const Integer& b);
    int big_sign() const noexcept;
    static std::strong_ordering slow_cmp(const Integer& a, const Integer& b);
};

Integer abs(const Integer& x);
Integer gcd(Integer a, Integer b);

/// Floor of a/b for b > 0.
Integer floor_div(const Integer& a, const Integer& b);
/// Ceiling of a/b for b > 0.
Integer ceil_div(const Integer& a, const Integer& b);
/// Representative of a modulo b in [0, b) for b > 0.
Integer mod_floor(const Integer& a, const Integer& b);
/// Largest r with r*r <= x, for x >= 0.
Integer isqrt(const Integer& x);

/// Exact signed rational kept in lowest terms with a positive denominator.
struct Rational {
    Integer num;
    Integer den;

    /// Throws DomainError when den == 0.
    static Rational reduced(Integer num, Integer den);
    [[nodiscard]] std::string str() const;  // "-3/5"

    friend bool operator==(const Rational&, const Rational&) = default;
};

}  // namespace antiflip

template <>
struct std::hash<antiflip::Integer> {
    std::size_t operator()(const antiflip::Integer& x) const noexcept;
};
