#include "antiflip/mori.hpp"

#include <algorithm>
#include <numeric>

#include "antiflip/errors.hpp"

namespace antiflip {

const char* kind_name(NbhdKind k) {
    switch (k) {
        case NbhdKind::initial_flipping: return "flipping";
        case NbhdKind::initial_divisorial: return "divisorial";
        case NbhdKind::non_initial: return "non-initial";
    }
    return "?";
}

Integer delta_of(const WahlPair& w1, const WahlPair& w2) {
    return w2.m() * w1.a() + w1.m() * w2.a() - w1.m() * w2.m();
}

ExtremalNbhd ExtremalNbhd::member(WahlPair w1, WahlPair w2) {
    if (w1.is_smooth() && w2.is_smooth()) throw DomainError("an extremal neighborhood needs a Wahl point");
    Integer delta = delta_of(w1, w2);
    if (delta < 1) {
        throw DomainError("pairs " + w1.str() + ", " + w2.str() + " give delta = " + delta.str() +
                          "; K.C < 0 needs delta >= 1");
    }
    return ExtremalNbhd(std::move(w1), std::move(w2), std::move(delta));
}

ExtremalNbhd ExtremalNbhd::initial(WahlPair w1, WahlPair w2) {
    if (w2.is_smooth()) throw DomainError("the second pair of an initial neighborhood must be singular");
    if (!w1.is_smooth() && w2.m() <= w1.m()) {
        throw DomainError("initial neighborhood needs m2 > m1, got " + w1.str() + ", " + w2.str());
    }
    return member(std::move(w1), std::move(w2));
}

Rational ExtremalNbhd::kc() const { return Rational::reduced(-delta_, w1_.m() * w2_.m()); }

ExtremalNbhd ExtremalNbhd::mirrored() const { return ExtremalNbhd(w2_, w1_, delta_); }

bool ExtremalNbhd::equivalent(const ExtremalNbhd& other) const {
    return *this == other || (w1_ == other.w2_ && w2_ == other.w1_);
}

Integer presolution_delta(const WahlPair& w1p, const WahlPair& w2p, const Integer& c) {
    return c * w1p.m() * w2p.m() - w1p.m() * w2p.a() - w2p.m() * w1p.a();
}

PResolution::PResolution(WahlPair w1p, WahlPair w2p, Integer c)
    : w1p_(std::move(w1p)), w2p_(std::move(w2p)), c_(std::move(c)) {
    if (c_ < 1) throw DomainError("central curve needs c >= 1, got " + c_.str());
    delta_ = presolution_delta(w1p_, w2p_, c_);
    if (delta_ < 1) {
        throw DomainError("not an extremal P-resolution: delta = " + delta_.str() +
                          " (K is not positive on the central curve)");
    }
}

bool PResolution::equivalent(const PResolution& other) const {
    return *this == other || (c_ == other.c_ && w1p_ == other.w2p_ && w2p_ == other.w1p_);
}

NbhdKind classify(const ExtremalNbhd& e) {
    const Integer& delta = e.delta();
    Integer s = delta * e.w1().m() - e.w2().m();
    if (s.sign() < 0) return NbhdKind::initial_flipping;
    if (s.sign() > 0) return NbhdKind::non_initial;
    // delta*m1 = m2 forces m1 = delta, m2 = delta^2, a2 = delta^2 - (delta*a1 - 1).
    if (e.w1().m() != delta || e.w2().m() != delta * delta ||
        e.w2().a() != delta * delta - (delta * e.w1().a() - 1)) {
        throw DomainError("divisorial neighborhood " + e.w1().str() + ", " + e.w2().str() +
                          " does not have the shape m1 = delta, m2 = delta^2, a2 = delta^2 - (delta*a1 - 1)");
    }
    return NbhdKind::initial_divisorial;
}

MoriSequence::MoriSequence(const ExtremalNbhd& e) : delta_(e.delta()) {
    if (classify(e) == NbhdKind::non_initial) {
        throw DomainError("Mori sequences start at an initial neighborhood; " + e.w1().str() + ", " + e.w2().str() +
                          " has delta*m1 - m2 > 0");
    }
    first_ = e;
}

std::optional<MoriStep> MoriSequence::next() {
    if (index_ == 0) {
        const ExtremalNbhd& e = *first_;
        d_prev_ = e.w1().m();
        c_prev_ = e.w1().a();
        d_ = e.w2().m();
        c_ = e.w2().m() - e.w2().a();
        index_ = 1;
        return MoriStep{1, e};
    }
    if (finite() && index_ >= 2) return std::nullopt;
    Integer d_next = delta_ * d_ - d_prev_;
    Integer c_next = delta_ * c_ - c_prev_;
    ++index_;
    MoriStep step{index_,
                  ExtremalNbhd::trusted(WahlPair::trusted(d_, c_), WahlPair::trusted(d_next, d_next - c_next), delta_)};
    d_prev_ = std::move(d_);
    c_prev_ = std::move(c_);
    d_ = std::move(d_next);
    c_ = std::move(c_next);
    return step;
}

std::vector<MoriStep> mori_sequence(const ExtremalNbhd& e, std::size_t k) {
    MoriSequence seq(e);
    std::vector<MoriStep> out;
    while (out.size() < k) {
        auto step = seq.next();
        if (!step) break;
        out.push_back(std::move(*step));
    }
    return out;
}

namespace {

bool valid_pair_shape(const Integer& m, const Integer& a) {
    if (m == 1) return a == 1;
    return a >= 1 && a < m;
}

[[noreturn]] void not_a_member(const ExtremalNbhd& e) {
    throw DomainError("neighborhood " + e.w1().str() + ", " + e.w2().str() +
                      " does not lie on any Mori sequence (backward recursion leaves the valid range)");
}

}  // namespace

SequenceOrigin sequence_origin(const ExtremalNbhd& e) {
    const Integer& delta = e.delta();
    // State of E_i: (d_i, c_i) and (d_{i+1}, c_{i+1}).
    Integer d = e.w1().m();
    Integer c = e.w1().a();
    Integer dn = e.w2().m();
    Integer cn = e.w2().m() - e.w2().a();
    Integer index = 1;
    Integer back = 0;
    for (;;) {
        Integer s = delta * d - dn;
        if (s.sign() <= 0) break;
        if (delta == 2) {
            // Both recursions are arithmetic progressions: jump straight to
            // the first term d_1 with d_1 <= d_2 - d_1.
            Integer step = dn - d;
            Integer cstep = cn - c;
            if (step.sign() <= 0) not_a_member(e);
            Integer j = (d - 1) / step;
            d -= j * step;
            c -= j * cstep;
            dn = d + step;
            cn = c + cstep;
            back += j;
        } else {
            if (s >= d) not_a_member(e);
            Integer cp = delta * c - cn;
            dn = std::move(d);
            cn = std::move(c);
            d = std::move(s);
            c = std::move(cp);
            back += 1;
        }
        if (!valid_pair_shape(d, c) || !valid_pair_shape(dn, dn - cn)) not_a_member(e);
    }
    index += back;
    if (back == 0) return {e, index};
    // Validate the recovered initial member once (coprimality included).
    ExtremalNbhd initial = ExtremalNbhd::initial(WahlPair(d, c), WahlPair(dn, dn - cn));
    if (initial.delta() != delta) not_a_member(e);
    return {std::move(initial), std::move(index)};
}

namespace {

// Machine-integer version of sequence_origin + flip_exact. Inputs are below
// 2^30, so every product formed here stays below 2^62. Any irregularity
// returns nullopt and flip() reruns the exact path, which owns the
// diagnostics.
using Small = std::int64_t;

bool small_shape(Small m, Small a) { return m == 1 ? a == 1 : (a >= 1 && a < m); }

std::optional<PResolution> flip_fast(const ExtremalNbhd& e) {
    constexpr Small kLimit = Small{1} << 30;
    for (const Integer* x : {&e.w1().m(), &e.w1().a(), &e.w2().m(), &e.w2().a(), &e.delta()}) {
        if (!x->is_small() || x->small_value() >= kLimit) return std::nullopt;
    }
    const Small delta = e.delta().small_value();
    Small d = e.w1().m().small_value();
    Small c = e.w1().a().small_value();
    Small dn = e.w2().m().small_value();
    Small cn = dn - e.w2().a().small_value();
    for (;;) {
        Small s = delta * d - dn;
        if (s <= 0) break;
        if (delta == 2) {
            Small step = dn - d;
            Small cstep = cn - c;
            if (step <= 0) return std::nullopt;
            Small j = (d - 1) / step;
            d -= j * step;
            c -= j * cstep;
            dn = d + step;
            cn = c + cstep;
        } else {
            if (s >= d) return std::nullopt;
            Small cp = delta * c - cn;
            dn = d;
            cn = c;
            d = s;
            c = cp;
        }
        if (!small_shape(d, c) || !small_shape(dn, dn - cn)) return std::nullopt;
    }
    // The checks of ExtremalNbhd::initial and classify.
    const Small a2 = dn - cn;
    if (dn == 1 || (d != 1 && dn <= d)) return std::nullopt;
    if (std::gcd(d, c) != 1 || std::gcd(dn, a2) != 1) return std::nullopt;
    if (dn * c + d * a2 - d * dn != delta || delta * d - dn >= 0) return std::nullopt;

    const Small m2p = d;
    const Small a2p = d == 1 ? 1 : d - c;
    const Small m1p = dn - delta * d;
    Small a1p = 1;
    if (m1p != 1) {
        a1p = (dn - a2 - delta * c) % m1p;
        if (a1p < 0) a1p += m1p;
        if (a1p < 1 || std::gcd(m1p, a1p) != 1) return std::nullopt;
    }
    const Small numer = delta + m1p * a2p + m2p * a1p;
    const Small denom = m1p * m2p;
    if (numer % denom != 0) return std::nullopt;
    // Integrality of c makes deltaP = numer - m1p*a2p - m2p*a1p = delta.
    const Small cc = numer / denom;
    if (cc < 1) return std::nullopt;
    return PResolution::trusted(WahlPair::trusted(m1p, a1p), WahlPair::trusted(m2p, a2p), cc, e.delta());
}

}  // namespace

PResolution flip(const ExtremalNbhd& e) {
    if (auto p = flip_fast(e)) return std::move(*p);
    return flip_exact(e);
}

PResolution flip_exact(const ExtremalNbhd& e) {
    ExtremalNbhd initial = sequence_origin(e).initial;
    NbhdKind kind = classify(initial);
    if (kind == NbhdKind::initial_divisorial) {
        throw DomainError("neighborhood " + e.w1().str() + ", " + e.w2().str() +
                          " is divisorial; it contracts a divisor instead of flipping");
    }
    if (kind != NbhdKind::initial_flipping) not_a_member(e);

    const Integer& delta = initial.delta();
    const WahlPair& w1 = initial.w1();
    const WahlPair& w2 = initial.w2();

    // (m1, m1 - a1) is coprime and in range because w1 is.
    WahlPair w2p = w1.is_smooth() ? WahlPair::smooth() : WahlPair::trusted(w1.m(), w1.m() - w1.a());
    Integer m1p = w2.m() - delta * w1.m();
    WahlPair w1p = WahlPair::smooth();
    if (m1p != 1) {
        Integer a1p = mod_floor(w2.m() - w2.a() - delta * w1.a(), m1p);
        try {
            w1p = WahlPair(m1p, a1p);
        } catch (const DomainError&) {
            throw InvariantViolation("flip of " + w1.str() + ", " + w2.str() + ": residue " + a1p.str() + " mod " +
                                     m1p.str() + " is not a Wahl pair");
        }
    }
    Integer numer = delta + w1p.m() * w2p.a() + w2p.m() * w1p.a();
    Integer denom = w1p.m() * w2p.m();
    if (numer % denom != 0) {
        throw InvariantViolation("flip of " + w1.str() + ", " + w2.str() + ": central curve number " + numer.str() +
                                 "/" + denom.str() + " is not an integer");
    }
    PResolution p(std::move(w1p), std::move(w2p), numer / denom);
    if (p.delta() != delta) {
        throw InvariantViolation("flip of " + w1.str() + ", " + w2.str() + " changed delta");
    }
    return p;
}

std::vector<ExtremalNbhd> initial_neighborhoods(const PResolution& p) {
    const Integer& delta = p.delta();
    std::vector<ExtremalNbhd> out;
    auto build = [&](const WahlPair& side, const WahlPair& other) {
        Integer m1 = side.m();
        Integer a1 = side.is_smooth() ? Integer(1) : side.m() - side.a();
        Integer m2 = other.m() + delta * m1;
        Integer numer = delta + m1 * m2 - m2 * a1;
        if (numer % m1 != 0) {
            throw InvariantViolation("antiflip of " + display(p) + ": a2 = " + numer.str() + "/" + m1.str() +
                                     " is not an integer");
        }
        try {
            out.push_back(ExtremalNbhd::initial(WahlPair(m1, a1), WahlPair(m2, numer / m1)));
        } catch (const DomainError& err) {
            throw InvariantViolation("antiflip of " + display(p) + " is not a valid neighborhood: " + err.what());
        }
        const ExtremalNbhd& e = out.back();
        if (classify(e) != NbhdKind::initial_flipping || !flip(e).equivalent(p)) {
            throw InvariantViolation("antiflip of " + display(p) + " does not flip back");
        }
    };
    build(p.w2p(), p.w1p());
    if (p.w1p() != p.w2p()) build(p.w1p(), p.w2p());
    std::sort(out.begin(), out.end(), [](const ExtremalNbhd& x, const ExtremalNbhd& y) {
        return x.w1().m() != y.w1().m() ? x.w1().m() < y.w1().m() : x.w2().m() < y.w2().m();
    });
    return out;
}

WahlPair divisorial_target(const ExtremalNbhd& e) {
    ExtremalNbhd initial = sequence_origin(e).initial;
    if (classify(initial) != NbhdKind::initial_divisorial) {
        throw DomainError("neighborhood " + e.w1().str() + ", " + e.w2().str() + " belongs to a flipping family");
    }
    return initial.w1();
}

UsualFlip usual_flip_step(const WahlPair& w) {
    if (w.is_smooth()) throw DomainError("usual flip needs a Wahl point, got the smooth pair");
    const CFrac chain = wahl_chain(conjugate(w));
    const auto& e = chain.entries();
    std::size_t i0 = e.size();
    while (i0 > 0 && e[i0 - 1] < 3) --i0;
    if (i0 == 0) throw InvariantViolation("Wahl chain of " + w.str() + " has no entry >= 3");

    UsualFlip out{e[0] - 1, WahlPair::smooth()};
    if (i0 > 1) {
        std::vector<Integer> rest(e.begin() + 1, e.begin() + static_cast<std::ptrdiff_t>(i0));
        rest.back() -= 1;
        CFrac truncated(std::move(rest));
        auto next = recognize_wahl(truncated);
        if (!next) throw InvariantViolation("usual flip of " + w.str() + ": " + truncated.str() + " is not a Wahl chain");
        out = UsualFlip{e[0], *next};
    }
    if (out.presolution().delta() != w.a()) {
        throw InvariantViolation("usual flip of " + w.str() + " does not preserve delta = " + w.a().str());
    }
    return out;
}

namespace {

std::string side_left(const WahlPair& w) { return w.is_smooth() ? kSmooth : wahl_chain(w).reversed().str(); }
std::string side_right(const WahlPair& w) { return w.is_smooth() ? kSmooth : wahl_chain(w).str(); }

void append_side(std::vector<Integer>& chain, std::vector<bool>& flags, const WahlPair& w, bool reversed) {
    if (w.is_smooth()) return;
    CFrac c = wahl_chain(w);
    if (reversed) c = c.reversed();
    chain.insert(chain.end(), c.entries().begin(), c.entries().end());
    flags.insert(flags.end(), c.size(), true);
}

ResolutionChain assemble(const WahlPair& left, const Integer& middle, const WahlPair& right) {
    std::vector<Integer> chain;
    std::vector<bool> flags;
    append_side(chain, flags, left, true);
    chain.push_back(middle);
    flags.push_back(false);
    append_side(chain, flags, right, false);
    return {Chain(std::move(chain)), std::move(flags)};
}

Fraction contract(const Chain& chain, const std::string& what) {
    Chain normal = reduce(chain);
    if (normal.empty()) throw DomainError(what + " contracts to a smooth point");
    for (const auto& x : normal.entries()) {
        if (x < 2) throw DomainError(what + " does not contract to a cyclic quotient singularity");
    }
    return hj_evaluate(normal.to_cfrac());
}

}  // namespace

std::string display(const ExtremalNbhd& e) { return side_left(e.w2()) + kMinus + side_right(e.w1()); }

std::string display(const PResolution& p) {
    return side_left(p.w2p()) + kMinus + p.c().str() + kMinus + side_right(p.w1p());
}

std::string display_compact(const PResolution& p) {
    std::string out;
    if (!p.w2p().is_smooth()) out += side_left(p.w2p()) + kMinus;
    out += p.c().str();
    if (!p.w1p().is_smooth()) out += kMinus + side_right(p.w1p());
    return out;
}

ResolutionChain resolution_chain(const ExtremalNbhd& e) { return assemble(e.w2(), 1, e.w1()); }

ResolutionChain resolution_chain(const PResolution& p) { return assemble(p.w2p(), p.c(), p.w1p()); }

Fraction presolution_target(const PResolution& p) {
    try {
        return contract(resolution_chain(p).chain, "P-resolution " + display(p));
    } catch (const DomainError& err) {
        throw InvariantViolation(err.what());
    }
}

Fraction contracted_type(const ExtremalNbhd& e) {
    return contract(resolution_chain(e).chain, "neighborhood " + display(e));
}

}  // namespace antiflip
