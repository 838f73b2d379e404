#include "antiflip/integer.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include <boost/multiprecision/integer.hpp>

#include "antiflip/errors.hpp"

namespace antiflip {

namespace {

const Integer::Big kMin = std::numeric_limits<std::int64_t>::min();
const Integer::Big kMax = std::numeric_limits<std::int64_t>::max();

}  // namespace

Integer::Integer(const Big& v) {
    if (v >= kMin && v <= kMax) {
        small_ = static_cast<std::int64_t>(v);
    } else {
        big_ = new Big(v);
    }
}

Integer::Big* Integer::copy_big(const Big& b) { return new Big(b); }
void Integer::free_big(Big* b) noexcept { delete b; }

Integer Integer::parse(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (body.empty()) throw DomainError("malformed integer: '" + std::string(text) + "'");
    for (char ch : body) {
        if (ch < '0' || ch > '9') throw DomainError("malformed integer: '" + std::string(text) + "'");
    }
    std::string digits(text.front() == '+' ? text.substr(1) : text);
    return Integer(Big(digits));
}

std::string Integer::str() const { return big_ ? big_->str() : std::to_string(small_); }

std::size_t Integer::digits() const {
    std::string s = str();
    return s.front() == '-' ? s.size() - 1 : s.size();
}

int Integer::big_sign() const noexcept { return big_->sign(); }

Integer Integer::slow_add(const Integer& a, const Integer& b) { return Integer(a.to_big() + b.to_big()); }
Integer Integer::slow_sub(const Integer& a, const Integer& b) { return Integer(a.to_big() - b.to_big()); }
Integer Integer::slow_mul(const Integer& a, const Integer& b) { return Integer(a.to_big() * b.to_big()); }

Integer Integer::slow_div(const Integer& a, const Integer& b) {
    if (b.sign() == 0) throw DomainError("integer division by zero");
    return Integer(a.to_big() / b.to_big());
}

Integer Integer::slow_mod(const Integer& a, const Integer& b) {
    if (b.sign() == 0) throw DomainError("integer division by zero");
    return Integer(a.to_big() % b.to_big());
}

std::strong_ordering Integer::slow_cmp(const Integer& a, const Integer& b) {
    int c = a.to_big().compare(b.to_big());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Integer& x) {
    if (x.big_) return os << *x.big_;
    return os << x.small_;
}

Integer abs(const Integer& x) { return x.sign() < 0 ? -x : x; }

Integer gcd(Integer a, Integer b) {
    if (a.is_small() && b.is_small() && a.small_value() != INT64_MIN && b.small_value() != INT64_MIN) {
        return Integer(std::gcd(a.small_value(), b.small_value()));
    }
    a = abs(a);
    b = abs(b);
    while (b.sign() != 0) {
        Integer r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b).sign() < 0) q -= 1;
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b).sign() > 0) q += 1;
    return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
    Integer r = a % b;
    if (r.sign() < 0) r += b;
    return r;
}

Integer isqrt(const Integer& x) {
    if (x.sign() < 0) throw DomainError("square root of a negative integer");
    return Integer(boost::multiprecision::sqrt(x.to_big()));
}

Rational Rational::reduced(Integer num, Integer den) {
    if (den.sign() == 0) throw DomainError("rational with zero denominator");
    if (den.sign() < 0) {
        num = -num;
        den = -den;
    }
    Integer g = gcd(num, den);
    return {num / g, den / g};
}

std::string Rational::str() const { return den == 1 ? num.str() : num.str() + "/" + den.str(); }

}  // namespace antiflip

std::size_t std::hash<antiflip::Integer>::operator()(const antiflip::Integer& x) const noexcept {
    if (x.is_small()) return std::hash<std::int64_t>{}(x.small_value());
    return std::hash<std::string>{}(x.str());
}
