#include "antiflip/wahl.hpp"

#include <ostream>

#include "antiflip/errors.hpp"

namespace antiflip {

WahlPair::WahlPair(Integer m, Integer a) : m_(std::move(m)), a_(std::move(a)) {
    if (m_ == 1 && a_ == 1) return;
    if (a_ < 1 || m_ <= a_) throw DomainError("Wahl pair " + str() + " needs m > a >= 1 (or the smooth pair (1,1))");
    if (gcd(m_, a_) != 1) throw DomainError("Wahl pair " + str() + " is not coprime");
}

std::string WahlPair::str() const { return "(" + m_.str() + "," + a_.str() + ")"; }

std::ostream& operator<<(std::ostream& os, const WahlPair& w) { return os << w.str(); }

namespace {

void require_singular(const WahlPair& w) {
    if (w.is_smooth()) throw DomainError("the smooth point (1,1) has no resolution chain");
}

}  // namespace

CFrac wahl_chain_direct(const WahlPair& w) {
    require_singular(w);
    return hj_expand(Fraction(w.m() * w.m(), w.m() * w.a() - 1));
}

CFrac wahl_chain_glued(const WahlPair& w) {
    require_singular(w);
    Fraction f(w.m(), w.a());
    CFrac a = hj_expand(f);
    CFrac b = hj_dual(f).second;
    std::vector<Integer> out(a.entries().begin(), a.entries().end() - 1);
    out.push_back(a.entries().back() + b.entries().back());
    out.insert(out.end(), b.entries().rbegin() + 1, b.entries().rend());
    return CFrac(std::move(out));
}

CFrac wahl_chain(const WahlPair& w) {
    CFrac direct = wahl_chain_direct(w);
    CFrac glued = wahl_chain_glued(w);
    if (direct != glued) {
        throw InvariantViolation("Wahl chain of " + w.str() + ": direct expansion " + direct.str() +
                                 " differs from glued construction " + glued.str());
    }
    return direct;
}

std::optional<WahlPair> recognize_wahl(const CFrac& c) {
    Fraction f = hj_evaluate(c);
    Integer m = isqrt(f.num());
    if (m * m != f.num()) return std::nullopt;
    Integer top = f.den() + 1;
    if (top % m != 0) return std::nullopt;
    Integer a = top / m;
    if (a < 1 || a >= m || gcd(m, a) != 1) return std::nullopt;
    WahlPair w(m, a);
    if (wahl_chain(w) != c) return std::nullopt;
    return w;
}

WahlPair conjugate(const WahlPair& w) {
    if (w.is_smooth()) return w;
    return WahlPair(w.m(), w.m() - w.a());
}

WahlPair canonical(const WahlPair& w) {
    WahlPair other = conjugate(w);
    return other.a() < w.a() ? other : w;
}

}  // namespace antiflip
