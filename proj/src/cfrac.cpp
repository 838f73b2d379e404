#include "antiflip/cfrac.hpp"

#include <algorithm>
#include <ostream>

#include "antiflip/errors.hpp"

namespace antiflip {

Fraction::Fraction(Integer n, Integer a) : num_(std::move(n)), den_(std::move(a)) {
    if (den_ < 1 || num_ <= den_) {
        throw DomainError("fraction " + str() + " needs n > a >= 1");
    }
    if (gcd(num_, den_) != 1) {
        throw DomainError("fraction " + str() + " is not reduced: gcd(n,a) != 1");
    }
}

std::string Fraction::str() const { return "(" + num_.str() + "," + den_.str() + ")"; }

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

bool same_singularity(const Fraction& x, const Fraction& y) {
    if (x.num() != y.num()) return false;
    return x.den() == y.den() || (x.den() * y.den()) % x.num() == 1;
}

CFrac::CFrac(std::vector<Integer> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DomainError("continued fraction must be non-empty");
    for (const auto& e : entries_) {
        if (e < 2) throw DomainError("continued fraction entry " + e.str() + " is below 2 in " + str());
    }
}

CFrac CFrac::reversed() const {
    std::vector<Integer> r(entries_.rbegin(), entries_.rend());
    return CFrac(std::move(r));
}

std::string CFrac::str() const { return bracket_list(entries_); }

std::ostream& operator<<(std::ostream& os, const CFrac& c) { return os << c.str(); }

std::string bracket_list(const std::vector<Integer>& entries) {
    std::string out = "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ',';
        out += entries[i].str();
    }
    out += ']';
    return out;
}

CFrac hj_expand(const Fraction& f) {
    std::vector<Integer> out;
    Integer n = f.num();
    Integer a = f.den();
    for (;;) {
        Integer e = ceil_div(n, a);
        Integer r = e * a - n;
        out.push_back(std::move(e));
        if (r == 0) break;
        n = std::move(a);
        a = std::move(r);
    }
    return CFrac(std::move(out));
}

Fraction hj_evaluate(const CFrac& c) {
    const auto& e = c.entries();
    Integer p = e.back();
    Integer q = 1;
    for (auto it = e.rbegin() + 1; it != e.rend(); ++it) {
        Integer next = *it * p - q;
        q = std::move(p);
        p = std::move(next);
    }
    return Fraction(std::move(p), std::move(q));
}

std::pair<Fraction, CFrac> hj_dual(const Fraction& f) {
    Fraction dual(f.num(), f.num() - f.den());
    CFrac expansion = hj_expand(dual);
    return {std::move(dual), std::move(expansion)};
}

}  // namespace antiflip
