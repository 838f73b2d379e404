#include "antiflip/embeddings.hpp"

#include <algorithm>

#include "antiflip/errors.hpp"

namespace antiflip {

std::string describe(const Target& t) {
    struct Visitor {
        std::string operator()(const ChainNbhd& v) const { return "V" + v.gamma.str(); }
        std::string operator()(const BlownUpBall& v) const {
            return "B_{" + v.w.m().str() + "," + v.w.a().str() + "}#CP2bar";
        }
        std::string operator()(const MilnorFiber& v) const { return "M(" + display_compact(v.p) + ")"; }
    };
    return std::visit(Visitor{}, t);
}

const char* simplicity_name(Simplicity s) {
    switch (s) {
        case Simplicity::simple: return "simple";
        case Simplicity::simple_for_later: return "simple-for-i>1";
        case Simplicity::non_simple: return "non-simple";
        case Simplicity::none: return "none";
    }
    return "?";
}

Simplicity parse_simplicity(const std::string& s) {
    for (Simplicity v : {Simplicity::simple, Simplicity::simple_for_later, Simplicity::non_simple, Simplicity::none}) {
        if (s == simplicity_name(v)) return v;
    }
    throw DomainError("unknown simplicity label '" + s + "'");
}

EmbeddingStep make_embedding_step(std::size_t family, MoriStep step) {
    WahlPair c1 = canonical(step.nbhd.w1());
    WahlPair c2 = canonical(step.nbhd.w2());
    return {family, std::move(step), std::move(c1), std::move(c2)};
}

namespace {

void require_usual(const CFrac& gamma) {
    if (gamma.entries().back() < 3) {
        throw DomainError("chain " + gamma.str() + " ends in 2; a usual initial neighborhood needs last entry >= 3");
    }
}

void append_family(EmbeddingReport& r, std::size_t family, const ExtremalNbhd& initial, std::size_t k) {
    for (auto& step : mori_sequence(initial, k)) r.steps.push_back(make_embedding_step(family, std::move(step)));
}

}  // namespace

ExtremalNbhd usual_initial(const CFrac& gamma) {
    require_usual(gamma);
    std::vector<Integer> e = gamma.entries();
    e.back() -= 1;
    Fraction f = hj_evaluate(CFrac(std::move(e)));
    return ExtremalNbhd::initial(WahlPair::smooth(), WahlPair(f.num(), f.num() - f.den()));
}

std::vector<UsualFlip> usual_flip_sequence(const CFrac& gamma) {
    ExtremalNbhd e = usual_initial(gamma);
    std::vector<UsualFlip> out;
    WahlPair w = e.w2();
    // Each step removes at least one entry from the chain, so this ends.
    for (;;) {
        UsualFlip f = usual_flip_step(w);
        out.push_back(f);
        if (f.next.is_smooth()) break;
        w = conjugate(f.next);
    }
    return out;
}

EmbeddingReport embed_linear(const CFrac& gamma, std::size_t k) {
    EmbeddingReport r{ChainNbhd{gamma}, std::nullopt, false, Simplicity::none, {}, {}};
    const auto& e = gamma.entries();
    if (e.back() < 3) {
        r.reason = "the last curve of " + gamma.str() + " is a (-2)-curve, so there is no usual initial neighborhood";
        if (std::all_of(e.begin(), e.end(), [](const Integer& x) { return x == 2; })) {
            r.reason += "; a chain of (-2)-curves has no extremal P-resolution (K is trivial on every curve), "
                        "so no ball embeds";
        }
        return r;
    }
    ExtremalNbhd initial = usual_initial(gamma);
    r.delta = initial.delta();
    r.infinite = initial.delta() >= 2;
    r.simplicity = Simplicity::simple;
    append_family(r, 1, initial, k);
    return r;
}

EmbeddingReport embed_blowup(const WahlPair& w, std::size_t k) {
    if (w.is_smooth()) throw DomainError("blown-up ball needs a Wahl pair, got the smooth pair");
    const Integer& n = w.m();
    Integer n2 = n * n;
    ExtremalNbhd initial = ExtremalNbhd::initial(w, WahlPair(n2, n2 - (n * w.a() - 1)));
    if (classify(initial) != NbhdKind::initial_divisorial || initial.delta() != n) {
        throw InvariantViolation("blow-up family of " + w.str() + " is not divisorial with delta = " + n.str());
    }
    EmbeddingReport r{BlownUpBall{w}, initial.delta(), true, Simplicity::simple_for_later, {}, {}};
    append_family(r, 1, initial, k);
    return r;
}

EmbeddingReport embed_milnor(const PResolution& p, std::size_t k) {
    if (p.singular_sides() == 2) {
        throw DomainError("P-resolution " + display(p) + " has two Wahl points; Milnor fiber embeddings need exactly one");
    }
    if (p.singular_sides() == 0) {
        throw DomainError("P-resolution " + display(p) + " has no Wahl point; it is the minimal resolution");
    }
    EmbeddingReport r{MilnorFiber{p, presolution_target(p)}, p.delta(), p.delta() >= 2, Simplicity::non_simple, {}, {}};
    std::size_t family = 0;
    for (const auto& initial : initial_neighborhoods(p)) append_family(r, ++family, initial, k);
    return r;
}

EmbeddingReport embed_milnor(const WahlPair& w, const Integer& c, std::size_t k) {
    return embed_milnor(PResolution(WahlPair::smooth(), w, c), k);
}

}  // namespace antiflip
